#include "nakelvin/serialize.hpp"

#include <json.hpp>

namespace nak {

namespace {

using json = nlohmann::ordered_json;

json center_to_json(const std::vector<PAdic>& center) {
    json out = json::array();
    for (const PAdic& c : center) {
        json coord;
        if (c.is_exact_zero()) {
            coord["val"] = 0;
            coord["digits"] = json::array();
        } else {
            coord["val"] = c.valuation();
            json digits = json::array();
            for (int i = 0; i < c.precision(); ++i) digits.push_back(c.digit_at(c.valuation() + i));
            coord["digits"] = digits;
        }
        out.push_back(coord);
    }
    return out;
}

std::vector<PAdic> center_from_json(const json& arr, long p) {
    std::vector<PAdic> out;
    for (const auto& coord : arr) {
        std::vector<int32_t> digits;
        for (const auto& d : coord.at("digits")) digits.push_back(d.get<int32_t>());
        if (digits.empty()) {
            out.push_back(PAdic::zero(p));
        } else {
            out.push_back(PAdic(p, coord.at("val").get<long>(), std::move(digits), true));
        }
    }
    return out;
}

template <class C, class CoeffOut>
std::string to_json_impl(const TestFunction<C>& f, const char* kind, CoeffOut&& coeff_out) {
    json out;
    out["context"] = {{"p", f.p()}, {"n", f.n()}};
    out["coeff_type"] = kind;
    json terms = json::array();
    for (const auto& term : f.terms()) {
        json t;
        t["center"] = center_to_json(term.ball.center());
        t["radius_exp"] = term.ball.radius_exp();
        t["coeff"] = coeff_out(term.coeff);
        terms.push_back(t);
    }
    out["terms"] = terms;
    return out.dump(2);
}

template <class C, class CoeffIn>
TestFunction<C> from_json_impl(const std::string& text, const char* kind, CoeffIn&& coeff_in) {
    json in;
    try {
        in = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad test-function JSON: ") + e.what());
    }
    long p = in.at("context").at("p").get<long>();
    int n = in.at("context").at("n").get<int>();
    if (in.at("coeff_type").get<std::string>() != kind) {
        throw ParseError("coefficient type mismatch in test-function JSON");
    }
    TestFunction<C> out(p, n);
    for (const auto& t : in.at("terms")) {
        Ball b(p, center_from_json(t.at("center"), p), t.at("radius_exp").get<long>());
        out.add_term(b, coeff_in(t.at("coeff")));
    }
    return out;
}

} // namespace

std::string testfunction_to_json(const TestFunction<SymbolicScalar>& f) {
    return to_json_impl(f, "rational_function",
                        [](const SymbolicScalar& c) { return json(c.str()); });
}

std::string testfunction_to_json(const TestFunction<std::complex<double>>& f) {
    return to_json_impl(f, "complex", [](const std::complex<double>& c) {
        return json::array({c.real(), c.imag()});
    });
}

TestFunction<SymbolicScalar> testfunction_from_json_exact(const std::string& text) {
    return from_json_impl<SymbolicScalar>(text, "rational_function", [](const json& j) {
        return SymbolicScalar::parse(j.get<std::string>());
    });
}

TestFunction<std::complex<double>> testfunction_from_json_numeric(const std::string& text) {
    return from_json_impl<std::complex<double>>(text, "complex", [](const json& j) {
        return std::complex<double>{j.at(0).get<double>(), j.at(1).get<double>()};
    });
}

} // namespace nak
