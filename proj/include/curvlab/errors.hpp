#pragma once

#include <stdexcept>
#include <string>

namespace curvlab {

/// Bad call-site arguments: shape mismatches, out-of-range indices.
class argument_error : public std::invalid_argument {
public:
    explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A section fails its defining identity (e.g. J*J != -1, non-antisymmetric form).
class invalid_section_error : public std::runtime_error {
public:
    explicit invalid_section_error(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid input outside the supported class (e.g. non-unipotent inverse).
class unsupported_input_error : public std::runtime_error {
public:
    explicit unsupported_input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Metric degenerate at a requested evaluation point.
class degenerate_metric_error : public std::runtime_error {
public:
    explicit degenerate_metric_error(const std::string& what) : std::runtime_error(what) {}
};

/// A structural guarantee the library relies on failed; indicates a bug.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace curvlab
