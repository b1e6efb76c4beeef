#pragma once

// Line-oriented text format for complexes with involutions.
//
//   ring F2[U,V] | F2[U]
//   generator NAME GR_W GR_Z      (bigraded)  /  generator NAME GR  (graded)
//   d FROM TO U V                 /  d FROM TO U
//   iota FROM TO U V              /  iota FROM TO U
//
// Output is canonical: generators in stored order, then d lines, then iota
// lines, each sorted by (from, to, exponents).  Blank lines and lines
// starting with '#' are ignored on input.  Duplicate term lines are
// rejected: XOR semantics must be pre-resolved.

#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "involutive.hpp"

namespace iotacalc {

using ComplexDocument = std::variant<IotaKComplex, IotaComplex>;

inline std::string serialize(const IotaKComplex& k) {
    std::ostringstream os;
    os << "ring F2[U,V]\n";
    for (auto& g : k.cx.gens) os << "generator " << g.name << " " << g.gr_w << " " << g.gr_z << "\n";
    auto dump = [&](const char* tag, const UVMat& m) {
        for (size_t x = 0; x < m.size(); ++x)
            for (auto& [y, p] : m[x])
                for (auto& t : p.terms())
                    os << tag << " " << k.cx.gens[x].name << " " << k.cx.gens[y].name << " " << t.u
                       << " " << t.v << "\n";
    };
    dump("d", k.cx.diff);
    dump("iota", k.iota);
    return os.str();
}

inline std::string serialize(const IotaComplex& c) {
    std::ostringstream os;
    os << "ring F2[U]\n";
    for (auto& g : c.cx.gens) os << "generator " << g.name << " " << g.gr << "\n";
    auto dump = [&](const char* tag, const UMat& m) {
        for (size_t x = 0; x < m.size(); ++x)
            for (auto& [y, p] : m[x])
                for (int e : p.exponents())
                    os << tag << " " << c.cx.gens[x].name << " " << c.cx.gens[y].name << " " << e
                       << "\n";
    };
    dump("d", c.cx.diff);
    dump("iota", c.iota);
    return os.str();
}

inline std::string serialize(const ComplexDocument& doc) {
    if (std::holds_alternative<IotaKComplex>(doc)) return serialize(std::get<IotaKComplex>(doc));
    return serialize(std::get<IotaComplex>(doc));
}

namespace detail {

struct ParsedLine {
    std::string tag;
    std::vector<std::string> fields;
    int lineno = 0;
};

inline int parse_int(const std::string& s, int lineno, const char* what) {
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size())
        throw std::runtime_error("parse error at line " + std::to_string(lineno) + ": bad " +
                                 what + " '" + s + "'");
    return v;
}

}  // namespace detail

inline ComplexDocument deserialize(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    std::vector<detail::ParsedLine> lines;
    std::optional<std::string> ring;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        detail::ParsedLine pl;
        pl.lineno = lineno;
        if (!(ls >> pl.tag) || pl.tag[0] == '#') continue;
        std::string f;
        while (ls >> f) pl.fields.push_back(f);
        if (pl.tag == "ring") {
            if (ring || pl.fields.size() != 1)
                throw std::runtime_error("parse error at line " + std::to_string(lineno) +
                                         ": malformed ring line");
            ring = pl.fields[0];
            continue;
        }
        lines.push_back(std::move(pl));
    }
    if (!ring) throw std::runtime_error("parse error: missing ring line");
    bool uv = false;
    if (*ring == "F2[U,V]")
        uv = true;
    else if (*ring == "F2[U]")
        uv = false;
    else
        throw std::runtime_error("parse error: unknown ring tag '" + *ring + "'");

    const size_t gen_fields = uv ? 3 : 2;
    const size_t term_fields = uv ? 4 : 3;
    std::vector<UVGenerator> uv_gens;
    std::vector<UGenerator> u_gens;
    for (auto& pl : lines) {
        if (pl.tag != "generator") continue;
        if (pl.fields.size() != gen_fields)
            throw std::runtime_error("parse error at line " + std::to_string(pl.lineno) +
                                     ": generator needs " + std::to_string(gen_fields) +
                                     " fields");
        if (uv)
            uv_gens.push_back(UVGenerator{pl.fields[0],
                                          detail::parse_int(pl.fields[1], pl.lineno, "grading"),
                                          detail::parse_int(pl.fields[2], pl.lineno, "grading")});
        else
            u_gens.push_back(
                UGenerator{pl.fields[0], detail::parse_int(pl.fields[1], pl.lineno, "grading")});
    }
    const size_t n = uv ? uv_gens.size() : u_gens.size();
    auto index_of = [&](const std::string& name, int lineno_) -> int {
        for (size_t i = 0; i < n; ++i)
            if ((uv ? uv_gens[i].name : u_gens[i].name) == name) return static_cast<int>(i);
        throw std::runtime_error("parse error at line " + std::to_string(lineno_) +
                                 ": unknown generator '" + name + "'");
    };

    UVMat uv_d(n), uv_i(n);
    UMat u_d(n), u_i(n);
    for (auto& pl : lines) {
        if (pl.tag == "generator") continue;
        if (pl.tag != "d" && pl.tag != "iota")
            throw std::runtime_error("parse error at line " + std::to_string(pl.lineno) +
                                     ": unknown tag '" + pl.tag + "'");
        if (pl.fields.size() != term_fields)
            throw std::runtime_error("parse error at line " + std::to_string(pl.lineno) + ": " +
                                     pl.tag + " needs " + std::to_string(term_fields) + " fields");
        int from = index_of(pl.fields[0], pl.lineno);
        int to = index_of(pl.fields[1], pl.lineno);
        if (uv) {
            UVTerm t{detail::parse_int(pl.fields[2], pl.lineno, "exponent"),
                     detail::parse_int(pl.fields[3], pl.lineno, "exponent")};
            UVMat& m = pl.tag == "d" ? uv_d : uv_i;
            if (entry(m, from, to).contains(t))
                throw std::runtime_error("parse error at line " + std::to_string(pl.lineno) +
                                         ": duplicate term " + pl.fields[0] + " -> " +
                                         pl.fields[1]);
            add_to(m, from, to, UVPoly(t));
        } else {
            int e = detail::parse_int(pl.fields[2], pl.lineno, "exponent");
            UMat& m = pl.tag == "d" ? u_d : u_i;
            if (entry(m, from, to).contains(e))
                throw std::runtime_error("parse error at line " + std::to_string(pl.lineno) +
                                         ": duplicate term " + pl.fields[0] + " -> " +
                                         pl.fields[1]);
            add_to(m, from, to, UPoly(e));
        }
    }
    // Complex constructors and involution validators check the gradings and
    // name the offending entries.
    if (uv) {
        IotaKComplex k{FreeUVComplex(std::move(uv_gens), std::move(uv_d)), std::move(uv_i), {}};
        k.validate();
        return k;
    }
    IotaComplex c{FreeUComplex(std::move(u_gens), std::move(u_d)), std::move(u_i)};
    c.validate();
    return c;
}

}  // namespace iotacalc
