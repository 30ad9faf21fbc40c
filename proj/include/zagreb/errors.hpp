#pragma once

#include <stdexcept>
#include <string>

namespace zagreb {

/// Base class for every error thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// graph construction
struct self_loop_error : error { using error::error; };
struct duplicate_edge_error : error { using error::error; };
struct index_out_of_range_error : error { using error::error; };

// analysis preconditions
struct isolated_vertex_error : error { using error::error; };
struct zero_degree_error : error { using error::error; };
struct inconsistent_histogram_error : error { using error::error; };
struct degree_window_error : error { using error::error; };

// exact arithmetic
struct overflow_error : error { using error::error; };

// family constructors
struct bad_parameter_error : error { using error::error; };
struct generation_failure_error : error { using error::error; };
struct not_degree_two_error : error { using error::error; };
struct not_cubic_error : error { using error::error; };

// encoding / parsing
struct decode_error : error { using error::error; };
struct parse_error : error { using error::error; };
struct order_too_large_error : error { using error::error; };

// search
struct realization_failure_error : error { using error::error; };

} // namespace zagreb
