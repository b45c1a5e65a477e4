#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mdiff {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A token collides with one of the reserved marker lines.
class MarkerCollision : public Error {
public:
    MarkerCollision(const std::string& marker, std::size_t line)
        : Error("reserved marker line in input: \"" + marker + "\" (line " + std::to_string(line) + ")")
        , line_number(line)
    {
    }

    std::size_t line_number; // 1-based
};

class GranularityMismatch : public Error {
public:
    GranularityMismatch()
        : Error("token sequences have different granularities")
    {
    }
};

// A merged-format document violates the marker grammar.
class MalformedFormat : public Error {
public:
    MalformedFormat(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")")
        , line_number(line)
    {
    }

    std::size_t line_number; // 1-based
};

class UnbalancedTags : public Error {
public:
    explicit UnbalancedTags(const std::string& tag)
        : Error("close tag without matching open tag: " + tag)
    {
    }
};

class QuestionError : public Error {
public:
    using Error::Error;
};

class NoInterrogative : public QuestionError {
public:
    NoInterrogative()
        : QuestionError("question contains no known interrogative word")
    {
    }
};

class MultipleInterrogatives : public QuestionError {
public:
    MultipleInterrogatives()
        : QuestionError("question contains more than one interrogative word")
    {
    }
};

class NoQuestionMark : public QuestionError {
public:
    NoQuestionMark()
        : QuestionError("question does not end with '?'")
    {
    }
};

class NoPlaceholderDifference : public Error {
public:
    NoPlaceholderDifference()
        : Error("no difference pairs exactly the placeholder token")
    {
    }
};

class AmbiguousPlaceholder : public Error {
public:
    AmbiguousPlaceholder()
        : Error("multiple differences pair the placeholder token")
    {
    }
};

class NoAnswer : public Error {
public:
    NoAnswer()
        : Error("no knowledge sentence yields a clean placeholder difference")
    {
    }
};

} // namespace mdiff
