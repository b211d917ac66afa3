#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Dense>

namespace gaudin {

using Cplx = std::complex<double>;
using Rat = boost::multiprecision::cpp_rational;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

// Thrown when an evaluation point or root collides with a pole of one of the
// rational expressions (marked point, root, or another root).
class collision_error : public std::invalid_argument {
public:
    explicit collision_error(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when a constructed object fails one of its own build-time
// self-checks (broken module, non-scalar Casimir, vacuum mismatch).
class inconsistency_error : public std::logic_error {
public:
    explicit inconsistency_error(const std::string& what) : std::logic_error(what) {}
};

class singular_jacobian_error : public std::runtime_error {
public:
    explicit singular_jacobian_error(const std::string& what) : std::runtime_error(what) {}
};

inline double rat_to_double(const Rat& r) {
    return static_cast<double>(r);
}

}  // namespace gaudin
