#include <cmath>

#include <qnp/error.hpp>
#include <qnp/slice.hpp>

namespace qnp
{

slice_frame slice_frame::from_units(const quaternion &I, const quaternion &J)
{
    const quaternion unit_i = I.imag() / I.imag_norm();
    quaternion unit_j = J.imag() - dot(J, unit_i) * unit_i;
    if (unit_j.norm() < 1e-12) {
        throw error(error_code::degenerate_input, "slice_frame: J must not be parallel to I");
    }
    unit_j = unit_j / unit_j.norm();
    return {unit_i, unit_j, unit_i * unit_j};
}

slice_frame slice_frame::through(const quaternion &p)
{
    if (p.imag_norm() == 0.0) {
        return {};
    }
    const quaternion I = p.unit_imag();
    // Gram-Schmidt from whichever axis is least aligned with I.
    const quaternion seed = std::abs(I.y) < 0.9 ? quaternion::j() : quaternion::k();
    return from_units(I, seed);
}

slice_sample sample_slice(const slice_function &f, const slice_frame &frame, const std::complex<double> &z)
{
    const auto [F, G] = frame.split(f(frame.from_complex(z)));
    return {frame, z, F, G};
}

Eigen::Matrix2cd slice_matrix(const quaternion &value_at_z, const quaternion &value_at_conj_z,
                              const slice_frame &frame)
{
    const auto [f_z, g_z] = frame.split(value_at_z);
    const auto [f_c, g_c] = frame.split(value_at_conj_z);
    Eigen::Matrix2cd phi;
    phi << f_z, g_z, -std::conj(g_c), std::conj(f_c);
    return phi;
}

quaternion slice_matrix_value(const Eigen::Matrix2cd &phi, const slice_frame &frame)
{
    return frame.merge(phi(0, 0), phi(0, 1));
}

quaternion star_eval(const slice_function &f, const slice_function &g, const quaternion &p)
{
    const slice_frame frame = slice_frame::through(p);
    const quaternion pc = p.conj();
    const Eigen::Matrix2cd phi = slice_matrix(f(p), f(pc), frame) * slice_matrix(g(p), g(pc), frame);
    return slice_matrix_value(phi, frame);
}

quaternion ext_eval(const quaternion &value_plus, const quaternion &value_minus, const quaternion &I,
                    const quaternion &J)
{
    return 0.5 * (value_plus + value_minus) + (J * I) * (0.5 * (value_minus - value_plus));
}

quaternion ext_eval(const slice_function &f_on_slice, const quaternion &I, const quaternion &target)
{
    const double x = target.real();
    const double y = target.imag_norm();
    if (y == 0.0) {
        return f_on_slice(quaternion{x});
    }
    const quaternion J = target.unit_imag();
    return ext_eval(f_on_slice(x + y * I), f_on_slice(x - y * I), I, J);
}

} // namespace qnp
