#include "wickring/json_io.hpp"

#include <limits>
#include <ostream>

#include "wickring/errors.hpp"

namespace wickring {

namespace {

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

} // namespace

Json spec_to_json(const TruncationSpec& spec) {
    return Json{{"num_vars", spec.num_vars}, {"max_degree", spec.max_degree}};
}

TruncationSpec spec_from_json(const Json& j) {
    TruncationSpec spec;
    spec.num_vars = require(j, "num_vars").get<std::uint32_t>();
    spec.max_degree = require(j, "max_degree").get<std::uint32_t>();
    if (spec.num_vars == 0)
        throw ParseError("num_vars must be positive");
    return spec;
}

Json element_to_json(const RingElement& f) {
    Json terms = Json::array();
    for (const auto& [alpha, c] : f.coeffs()) {
        Json t;
        t["alpha"] = alpha.to_dense(f.spec().num_vars);
        t["re"] = c.real();
        t["im"] = c.imag();
        terms.push_back(std::move(t));
    }
    return Json{{"terms", std::move(terms)}};
}

RingElement element_from_json(const Json& j, const TruncationSpec& spec) {
    RingElement f(spec);
    for (const auto& t : require(j, "terms")) {
        const auto dense = require(t, "alpha").get<std::vector<std::uint32_t>>();
        const MultiIndex alpha = MultiIndex::from_dense(dense);
        const Complex c(require(t, "re").get<double>(), require(t, "im").get<double>());
        if (!spec.admits(alpha))
            throw ParseError("term multi-index violates the truncation spec");
        f.set_coeff(alpha, f.coeff(alpha) + c);
    }
    return f;
}

Json element_doc(const RingElement& f) {
    Json j;
    j["truncation"] = spec_to_json(f.spec());
    j["terms"] = element_to_json(f).at("terms");
    return j;
}

RingElement element_from_doc(const Json& j) {
    return element_from_json(j, spec_from_json(require(j, "truncation")));
}

Json matrix_to_json(const RingMatrix& m) {
    Json rows = Json::array();
    for (std::uint32_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::uint32_t jx = 0; jx < m.cols(); ++jx)
            row.push_back(element_to_json(m.at(i, jx)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

RingMatrix matrix_from_json(const Json& j, const TruncationSpec& spec) {
    const auto rows = require(j, "rows").get<std::uint32_t>();
    const auto cols = require(j, "cols").get<std::uint32_t>();
    const Json& entries = require(j, "entries");
    if (entries.size() != rows)
        throw ParseError("entry row count does not match \"rows\"");
    RingMatrix m(spec, rows, cols);
    for (std::uint32_t i = 0; i < rows; ++i) {
        const Json& row = entries.at(i);
        if (row.size() != cols)
            throw ParseError("entry column count does not match \"cols\"");
        for (std::uint32_t jx = 0; jx < cols; ++jx)
            m.at(i, jx) = element_from_json(row.at(jx), spec);
    }
    return m;
}

Json system_to_json(const StateSpaceSystem& sys) {
    Json j;
    j["truncation"] = spec_to_json(sys.spec());
    j["dims"] = Json{{"state", sys.state_dim()},
                     {"input", sys.input_dim()},
                     {"output", sys.output_dim()}};
    j["A"] = matrix_to_json(sys.A);
    j["B"] = matrix_to_json(sys.B);
    j["C"] = matrix_to_json(sys.C);
    j["D"] = matrix_to_json(sys.D);
    return j;
}

StateSpaceSystem system_from_json(const Json& j) {
    const TruncationSpec spec = spec_from_json(require(j, "truncation"));
    const Json& dims = require(j, "dims");
    const auto n = require(dims, "state").get<std::uint32_t>();
    const auto q = require(dims, "input").get<std::uint32_t>();
    const auto p = require(dims, "output").get<std::uint32_t>();
    StateSpaceSystem sys(matrix_from_json(require(j, "A"), spec),
                         matrix_from_json(require(j, "B"), spec),
                         matrix_from_json(require(j, "C"), spec),
                         matrix_from_json(require(j, "D"), spec));
    if (sys.state_dim() != n || sys.input_dim() != q || sys.output_dim() != p)
        throw ParseError("declared dims do not match the matrix shapes");
    return sys;
}

Json signal_to_json(const SignalSequence& u, const TruncationSpec& spec) {
    Json j;
    j["truncation"] = spec_to_json(spec);
    Json seq = Json::array();
    for (const auto& un : u)
        seq.push_back(matrix_to_json(un));
    j["signal"] = std::move(seq);
    return j;
}

SignalSequence signal_from_json(const Json& j) {
    const TruncationSpec spec = spec_from_json(require(j, "truncation"));
    SignalSequence u;
    for (const auto& m : require(j, "signal"))
        u.push_back(matrix_from_json(m, spec));
    return u;
}

Json certificate_to_json(const Certificate& cert) {
    Json j;
    j["property"] = to_string(cert.property);
    j["verdict"] = to_string(cert.verdict);
    Json witness = Json::object();
    if (cert.minor_indices)
        witness["minor_indices"] = *cert.minor_indices;
    if (cert.rank_at_zero)
        witness["rank_at_zero"] = *cert.rank_at_zero;
    j["witness"] = std::move(witness);
    return j;
}

void write_csv(std::ostream& os, const ComplexMatrix& m) {
    const auto saved = os.precision(std::numeric_limits<double>::max_digits10);
    os << "row,col,re,im\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            os << i << ',' << j << ',' << m(i, j).real() << ',' << m(i, j).imag() << '\n';
    os.precision(saved);
}

} // namespace wickring
