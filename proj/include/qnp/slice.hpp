#ifndef QNP_SLICE_HPP
#define QNP_SLICE_HPP

#include <complex>
#include <functional>

#include <qnp/quaternion.hpp>

namespace qnp
{

using slice_function = std::function<quaternion(const quaternion &)>;

/// Orthonormal frame (1, I, J, K = IJ): the slice C_I and a unit J orthogonal to it.
struct slice_frame {
    quaternion I = quaternion::i();
    quaternion J = quaternion::j();
    quaternion K = quaternion::k();

    /// Frame with the given I and J; J is orthogonalized against I.
    static slice_frame from_units(const quaternion &I, const quaternion &J);

    /// Frame whose slice contains p. Real p gets the default (i, j) frame.
    static slice_frame through(const quaternion &p);

    std::complex<double> to_complex(const quaternion &q) const
    {
        return {q.w, dot(q, I)};
    }
    quaternion from_complex(const std::complex<double> &c) const
    {
        return c.real() + c.imag() * I;
    }

    /// q = c1 + c2 J with c1, c2 in C_I.
    std::pair<std::complex<double>, std::complex<double>> split(const quaternion &q) const
    {
        return {{q.w, dot(q, I)}, {dot(q, J), dot(q, K)}};
    }
    quaternion merge(const std::complex<double> &c1, const std::complex<double> &c2) const
    {
        return from_complex(c1) + from_complex(c2) * J;
    }
};

/// Holomorphic split f(z) = F(z) + G(z) J of a slice function on C_I at one point z.
struct slice_sample {
    slice_frame frame;
    std::complex<double> z;
    std::complex<double> F;
    std::complex<double> G;

    quaternion value() const
    {
        return frame.merge(F, G);
    }
};

slice_sample sample_slice(const slice_function &f, const slice_frame &frame, const std::complex<double> &z);

/// [[F(z), G(z)], [-conj G(conj z), conj F(conj z)]]; a homomorphism for the *-product on the slice.
Eigen::Matrix2cd slice_matrix(const quaternion &value_at_z, const quaternion &value_at_conj_z,
                              const slice_frame &frame);

/// Value f(z) = F(z) + G(z) J read off a slice matrix.
quaternion slice_matrix_value(const Eigen::Matrix2cd &phi, const slice_frame &frame);

/// (f * g)(p) by the slice-split product formula.
quaternion star_eval(const slice_function &f, const slice_function &g, const quaternion &p);

/// Representation formula: f(x + J y) from f(x + I y) and f(x - I y).
quaternion ext_eval(const quaternion &value_plus, const quaternion &value_minus, const quaternion &I,
                    const quaternion &J);

/// Extends the restriction of f to C_I to the point target = x + J y.
quaternion ext_eval(const slice_function &f_on_slice, const quaternion &I, const quaternion &target);

} // namespace qnp

#endif
