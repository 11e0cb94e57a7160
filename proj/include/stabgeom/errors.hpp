#pragma once

#include <stdexcept>
#include <string>

namespace stabgeom {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_prime_error : error { using error::error; };
struct unsupported_size_error : error { using error::error; };
struct no_modulus_error : error { using error::error; };

struct field_mismatch_error : error { using error::error; };
struct ambient_mismatch_error : error { using error::error; };
struct index_range_error : error { using error::error; };
struct odd_ambient_error : error { using error::error; };

struct invalid_range_error : error { using error::error; };
struct too_large_error : error { using error::error; };
struct boundary_case_error : error { using error::error; };
struct config_error : error { using error::error; };

} // namespace stabgeom
