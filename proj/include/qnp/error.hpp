#ifndef QNP_ERROR_HPP
#define QNP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qnp
{

enum class error_code {
    degenerate_input,
    singular_matrix,
    not_hermitian,
    sphere_collision,
    zero_constant_term,
    domain_error,
    invalid_problem,
    denominator_degenerate,
    inconsistent_data,
    no_unitary_parameter,
    infeasible,
    non_real_symmetrization,
    parse_error
};

const char *to_string(error_code code) noexcept;

// Single exception type for the library; the code drives CLI exit statuses.
class error : public std::runtime_error
{
public:
    error(error_code code, const std::string &what) : std::runtime_error(what), m_code(code) {}

    error_code code() const noexcept
    {
        return m_code;
    }

private:
    error_code m_code;
};

} // namespace qnp

#endif
