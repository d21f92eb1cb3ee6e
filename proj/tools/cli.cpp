#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "wickring/errors.hpp"
#include "wickring/json_io.hpp"

namespace wickring::cli {

namespace {

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void emit(const Json& j, const std::optional<std::string>& out_path, std::ostream& out) {
    if (out_path) {
        std::ofstream f(*out_path);
        if (!f)
            throw ParseError("cannot write file: " + *out_path);
        f << j.dump(2) << '\n';
    } else {
        out << j.dump(2) << '\n';
    }
}

EvalPoint eval_point(const std::string& text) {
    return EvalPoint{parse_complex_list(text)};
}

int classify(const Error& e) {
    const std::string& k = e.kind();
    if (k == "Parse" || k == "DimensionMismatch" || k == "SpecMismatch")
        return 2;
    return 3;
}

} // namespace

std::complex<double> parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw ParseError("empty complex literal");

    auto to_double = [&](const std::string& part, double empty_value) {
        if (part.empty() || part == "+")
            return empty_value;
        if (part == "-")
            return -empty_value;
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(part, &pos);
        } catch (const std::exception&) {
            throw ParseError("invalid complex literal: " + text);
        }
        if (pos != part.size())
            throw ParseError("invalid complex literal: " + text);
        return v;
    };

    if (s.back() != 'i' && s.back() != 'I')
        return {to_double(s, 0.0), 0.0};

    s.pop_back();
    // Split at the last sign that is not an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos)
        return {0.0, to_double(s, 1.0)};
    return {to_double(s.substr(0, split), 0.0), to_double(s.substr(split), 1.0)};
}

std::vector<std::complex<double>> parse_complex_list(const std::string& text) {
    std::vector<std::complex<double>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_complex(item));
    if (out.empty())
        throw ParseError("empty complex list");
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear system calculus over a truncated power-series ring"};
    app.require_subcommand(1);

    std::string system_path, system2_path, input_path, element_path, x0_path;
    std::optional<std::string> out_path;
    std::string zeta_text, z_text = "0";
    std::optional<std::uint32_t> steps;
    std::uint32_t horizon = 8;
    int norm_k_order = 0, vage_k = 0, vage_l = 0, kq_q = 0;
    double kq_delta = 1.0, sing_tol = 1e-10;

    auto* sim = app.add_subcommand("simulate", "Run the state recursion");
    sim->add_option("--system", system_path)->required();
    sim->add_option("--input", input_path)->required();
    sim->add_option("--steps", steps);
    sim->add_option("--x0", x0_path);
    sim->add_option("--out", out_path);

    auto* mar = app.add_subcommand("markov", "Markov parameters D, CB, CAB, ...");
    mar->add_option("--system", system_path)->required();
    mar->add_option("--n", horizon);
    mar->add_option("--out", out_path);

    auto* tfe = app.add_subcommand("tfeval", "Evaluate the transfer function");
    tfe->add_option("--system", system_path)->required();
    tfe->add_option("--zeta", zeta_text)->required();
    tfe->add_option("--z", z_text);
    tfe->add_option("--out", out_path);

    auto* chk = app.add_subcommand("check", "Certificate checks");
    std::string which;
    chk->add_option("kind", which, "obs|ctrl|rctrl|minimal")->required();
    chk->add_option("--system", system_path)->required();
    chk->add_option("--out", out_path);

    auto* nrm = app.add_subcommand("norm", "Coefficient-space norm of an element");
    nrm->add_option("--element", element_path)->required();
    nrm->add_option("--k", norm_k_order)->required();
    nrm->add_option("--out", out_path);

    auto* vag = app.add_subcommand("vage", "Wick multiplication constant A(k-l)");
    vag->add_option("--k", vage_k)->required();
    vag->add_option("--l", vage_l)->required();
    vag->add_option("--out", out_path);

    auto* kqc = app.add_subcommand("kq", "Evaluation-domain membership test");
    kqc->add_option("--z", z_text)->required();
    kqc->add_option("--q", kq_q)->required();
    kqc->add_option("--delta", kq_delta)->required();
    kqc->add_option("--out", out_path);

    auto* rea = app.add_subcommand("realize", "Realization algebra");
    std::string op;
    rea->add_option("op", op, "inverse|cascade|sum|rows|cols")->required();
    rea->add_option("--system", system_path)->required();
    rea->add_option("--system2", system2_path);
    rea->add_option("--tol", sing_tol);
    rea->add_option("--out", out_path);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (sim->parsed()) {
            const StateSpaceSystem sys = system_from_json(load_json(system_path));
            const SignalSequence u = signal_from_json(load_json(input_path));
            RingMatrix x0 = RingMatrix::zeros(sys.spec(), sys.state_dim(), 1);
            if (!x0_path.empty()) {
                const SignalSequence xs = signal_from_json(load_json(x0_path));
                if (xs.size() != 1)
                    throw ParseError("--x0 file must hold exactly one vector");
                x0 = xs[0];
            }
            const std::uint32_t t = steps.value_or(static_cast<std::uint32_t>(u.size()));
            const SimulationResult res = simulate(sys, u, x0, t);
            Json j;
            j["truncation"] = spec_to_json(sys.spec());
            j["states"] = signal_to_json(res.states, sys.spec()).at("signal");
            j["outputs"] = signal_to_json(res.outputs, sys.spec()).at("signal");
            emit(j, out_path, out);
        } else if (mar->parsed()) {
            const StateSpaceSystem sys = system_from_json(load_json(system_path));
            const TransferSeries h = markov(sys, horizon);
            Json j;
            j["truncation"] = spec_to_json(sys.spec());
            Json seq = Json::array();
            for (const auto& hn : h)
                seq.push_back(matrix_to_json(hn));
            j["markov"] = std::move(seq);
            emit(j, out_path, out);
        } else if (tfe->parsed()) {
            const StateSpaceSystem sys = system_from_json(load_json(system_path));
            const Complex zeta = parse_complex(zeta_text);
            EvalPoint z = eval_point(z_text);
            z.values.resize(sys.spec().num_vars, Complex(0.0));
            const ComplexMatrix h = tf_eval(sys, zeta, z);
            std::ostringstream csv;
            write_csv(csv, h);
            if (out_path) {
                std::ofstream f(*out_path);
                f << csv.str();
            } else {
                out << csv.str();
            }
        } else if (chk->parsed()) {
            const StateSpaceSystem sys = system_from_json(load_json(system_path));
            Certificate cert{Property::Observable, Verdict::Inconclusive, {}, {}};
            if (which == "obs")
                cert = observability_certificate(sys.C, sys.A);
            else if (which == "ctrl")
                cert = controllability_certificate(sys.A, sys.B);
            else if (which == "rctrl")
                cert = r_controllability_certificate(sys.A, sys.B);
            else if (which == "minimal")
                cert = minimality_certificate(sys);
            else
                throw ParseError("unknown check kind: " + which);
            emit(certificate_to_json(cert), out_path, out);
        } else if (nrm->parsed()) {
            const RingElement f = element_from_doc(load_json(element_path));
            emit(Json{{"k", norm_k_order}, {"norm", f.norm_k(norm_k_order)}}, out_path, out);
        } else if (vag->parsed()) {
            emit(Json{{"k", vage_k}, {"l", vage_l}, {"value", vage_constant(vage_k, vage_l)}},
                 out_path, out);
        } else if (kqc->parsed()) {
            const KqResult res = kq_membership(eval_point(z_text), kq_q, kq_delta);
            Json j{{"q", kq_q},
                   {"delta", kq_delta},
                   {"sum", res.divergent ? Json("inf") : Json(res.sum)},
                   {"member", res.member},
                   {"divergent", res.divergent}};
            emit(j, out_path, out);
        } else if (rea->parsed()) {
            const StateSpaceSystem s1 = system_from_json(load_json(system_path));
            std::optional<StateSpaceSystem> s2;
            if (!system2_path.empty())
                s2 = system_from_json(load_json(system2_path));
            auto need2 = [&]() -> const StateSpaceSystem& {
                if (!s2)
                    throw ParseError("this realization needs --system2");
                return *s2;
            };
            std::optional<StateSpaceSystem> result;
            if (op == "inverse")
                result = realize_inverse(s1, sing_tol);
            else if (op == "cascade")
                result = realize_cascade(s1, need2());
            else if (op == "sum")
                result = realize_sum(s1, need2());
            else if (op == "rows")
                result = realize_concat_rows(s1, need2());
            else if (op == "cols")
                result = realize_concat_cols(s1, need2());
            else
                throw ParseError("unknown realization op: " + op);
            emit(system_to_json(*result), out_path, out);
        }
    } catch (const Error& e) {
        const Json j{{"error", Json{{"kind", e.kind()}, {"detail", e.what()}}}};
        out << j.dump(2) << '\n';
        return classify(e);
    }
    return 0;
}

} // namespace wickring::cli
