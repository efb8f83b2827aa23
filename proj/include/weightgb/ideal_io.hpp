#ifndef WEIGHTGB_IDEAL_IO_HPP
#define WEIGHTGB_IDEAL_IO_HPP

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "field.hpp"
#include "monomial.hpp"
#include "order.hpp"
#include "parse.hpp"
#include "poly.hpp"

namespace wgb {

/// Order request attached to an ideal file or given on the command line.
struct OrderSpec {
    enum class Kind { Default, Weight, OmegaH, Matrix };
    Kind kind = Kind::Default;
    std::vector<std::int64_t> omega;             // Weight
    std::vector<std::vector<std::int64_t>> rows; // Matrix
};

struct IdealMetadata {
    bool radical = false;
    bool unmixed = false;
    bool prime = false;
    std::optional<int> bigheight;
    std::optional<bool> nondegenerate;
};

struct Window {
    int max_i = 1;
    std::int64_t max_j = 6;
};

struct IdealFile {
    std::string name; // file stem
    RingCtx ring;
    std::vector<std::string> generators;
    IdealMetadata metadata;
    OrderSpec order;
    Window window;
    std::uint64_t seed = 0;
};

namespace detail {

inline OrderSpec parse_order_spec(const nlohmann::json& j) {
    OrderSpec spec;
    std::string type = j.value("type", "");
    if (type == "weight") {
        spec.kind = OrderSpec::Kind::Weight;
        spec.omega = j.at("omega").get<std::vector<std::int64_t>>();
    } else if (type == "omega_h") {
        spec.kind = OrderSpec::Kind::OmegaH;
    } else if (type == "matrix") {
        spec.kind = OrderSpec::Kind::Matrix;
        spec.rows = j.at("rows").get<std::vector<std::vector<std::int64_t>>>();
    } else {
        throw parse_error("unknown order type '" + type + "'", 0);
    }
    return spec;
}

} // namespace detail

inline IdealFile parse_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw resource_error("cannot open ideal file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(path + ": invalid JSON: " + e.what(), 0);
    }

    IdealFile f;
    auto stem = path;
    if (auto slash = stem.find_last_of('/'); slash != std::string::npos)
        stem = stem.substr(slash + 1);
    if (auto dot = stem.rfind(".json"); dot != std::string::npos) stem = stem.substr(0, dot);
    f.name = stem;

    try {
        const auto& ring = j.at("ring");
        std::vector<std::string> vars = ring.at("vars").get<std::vector<std::string>>();
        int h = ring.at("h").get<int>();
        FieldDesc fd;
        const auto& fld = ring.at("field");
        if (fld.is_string()) {
            if (fld.get<std::string>() != "QQ")
                throw parse_error(path + ": unknown field " + fld.get<std::string>(), 0);
        } else {
            fd.p = fld.at("Fp").get<std::uint32_t>();
        }
        if (h < 1 || h > static_cast<int>(vars.size()))
            throw precondition_error(path + ": h out of range");
        f.ring = RingCtx{static_cast<int>(vars.size()), h, vars, fd};

        f.generators = j.at("generators").get<std::vector<std::string>>();
        if (f.generators.empty()) throw precondition_error(path + ": no generators");

        if (j.contains("metadata")) {
            const auto& m = j.at("metadata");
            f.metadata.radical = m.value("radical", false);
            f.metadata.unmixed = m.value("unmixed", false);
            f.metadata.prime = m.value("prime", false);
            if (m.contains("bigheight")) f.metadata.bigheight = m.at("bigheight").get<int>();
            if (m.contains("nondegenerate"))
                f.metadata.nondegenerate = m.at("nondegenerate").get<bool>();
        }
        if (j.contains("order")) f.order = detail::parse_order_spec(j.at("order"));
        if (j.contains("window")) {
            f.window.max_i = j.at("window").value("max_i", 1);
            f.window.max_j = j.at("window").value("max_j", std::int64_t{6});
            if (f.window.max_i < 0 || f.window.max_j < 0)
                throw precondition_error(path + ": negative window bound");
        }
        f.seed = j.value("seed", std::uint64_t{0});
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(path + ": schema error: " + e.what(), 0);
    }
    return f;
}

/// Parse the generator strings over the requested field. Errors carry the
/// generator index and byte offset.
template <Field K>
std::vector<Poly<K>> parse_generators(const IdealFile& f) {
    std::vector<Poly<K>> out;
    for (std::size_t i = 0; i < f.generators.size(); ++i) {
        try {
            out.push_back(parse_poly<K>(f.ring, f.generators[i]));
        } catch (const parse_error& e) {
            throw parse_error(f.name + ": generator " + std::to_string(i + 1) + ", offset " +
                                  std::to_string(e.offset) + ": " + e.what(),
                              e.offset);
        }
        if (out.back().is_zero())
            throw precondition_error(f.name + ": generator " + std::to_string(i + 1) + " is zero");
    }
    return out;
}

/// Resolve an order spec to a concrete weight vector for the ring; the
/// refinement monomial cap covers at least the given working degree.
inline WeightOrder resolve_weight(const OrderSpec& spec, const RingCtx& ring,
                                  std::int64_t working_degree) {
    switch (spec.kind) {
    case OrderSpec::Kind::Weight:
        if (static_cast<int>(spec.omega.size()) != ring.n)
            throw precondition_error("weight length does not match ring");
        return WeightOrder(spec.omega);
    case OrderSpec::Kind::Matrix: {
        MatrixOrder m{spec.rows};
        return refine_to_weight(m, monomials_up_to(ring.n, working_degree + 2));
    }
    case OrderSpec::Kind::OmegaH:
    case OrderSpec::Kind::Default: {
        auto m = omega_h_matrix(ring.n, ring.h);
        return refine_to_weight(m, monomials_up_to(ring.n, working_degree + 2));
    }
    }
    throw context_error("unreachable");
}

} // namespace wgb

#endif
