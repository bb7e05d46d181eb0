#pragma once

#include <stdexcept>
#include <string>

namespace ordinal {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class empty_window : public error {
public:
    using error::error;
};

class non_finite_value : public error {
public:
    using error::error;
};

class not_invertible : public error {
public:
    using error::error;
};

class dimension_too_large : public error {
public:
    using error::error;
};

class series_too_short : public error {
public:
    using error::error;
};

class mixed_pattern_spaces : public error {
public:
    using error::error;
};

class empty_input : public error {
public:
    using error::error;
};

class unsupported_pattern_space : public error {
public:
    using error::error;
};

class unsupported_combination : public error {
public:
    using error::error;
};

class universe_too_large : public error {
public:
    using error::error;
};

class unknown_claim : public error {
public:
    using error::error;
};

} // namespace ordinal
