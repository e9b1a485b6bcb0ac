/*
   Copyright 2026 The doubleplane authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "doubleplane/normal_form.hpp"
#include "doubleplane/parse.hpp"

namespace doubleplane {

// Line-oriented key/value instance description:
//
//   # a curve in the double plane
//   prime = 32003          (optional, default 32003)
//   s = 1
//   A = [[y, z]]           (s rows of s+1 polynomials; [] when s = 0)
//   p_row = [t, -y]
//   f_col = [t, y]
//   h = 1
//   seed = 7               (optional)
//
// Module files replace A/p_row/f_col/h by  M = [[...]]  (s rows, s+2 cols).
struct InstanceFile {
    std::uint32_t prime = kDefaultPrime;
    int s = 0;
    std::vector<std::vector<std::string>> a;
    std::vector<std::string> p_row;
    std::vector<std::string> f_col;
    std::string h;
    std::optional<std::uint64_t> seed;

    BMatrix to_bmatrix() const {
        check_prime(prime);
        if (static_cast<int>(a.size()) != s)
            throw Error("A must have s = " + std::to_string(s) + " rows");
        PolyMatrix am(s, s + 1, Ring::S, prime);
        for (int i = 0; i < s; ++i) {
            if (static_cast<int>(a[static_cast<std::size_t>(i)].size()) != s + 1)
                throw Error("row " + std::to_string(i + 1) + " of A must have s+1 entries");
            for (int j = 0; j <= s; ++j)
                am.set(i, j, parse_polynomial(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                              Ring::S, prime));
        }
        std::vector<Polynomial> pr, fc;
        for (const auto& t : p_row) pr.push_back(parse_polynomial(t, Ring::S, prime));
        for (const auto& t : f_col) fc.push_back(parse_polynomial(t, Ring::S, prime));
        return BMatrix(std::move(am), std::move(pr), std::move(fc),
                       parse_polynomial(h, Ring::S, prime));
    }
};

struct ModuleFile {
    std::uint32_t prime = kDefaultPrime;
    int s = 0;
    std::vector<std::vector<std::string>> m;
    std::optional<std::uint64_t> seed;

    PolyMatrix to_matrix() const {
        check_prime(prime);
        if (static_cast<int>(m.size()) != s)
            throw Error("M must have s = " + std::to_string(s) + " rows");
        PolyMatrix mm(s, s + 2, Ring::S, prime);
        for (int i = 0; i < s; ++i) {
            if (static_cast<int>(m[static_cast<std::size_t>(i)].size()) != s + 2)
                throw Error("row " + std::to_string(i + 1) + " of M must have s+2 entries");
            for (int j = 0; j < s + 2; ++j)
                mm.set(i, j, parse_polynomial(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                              Ring::S, prime));
        }
        return mm;
    }
};

namespace detail {

struct KeyValueLine {
    std::string key;
    std::string value;
    int line;
};

inline std::vector<KeyValueLine> read_key_values(const std::string& text) {
    std::vector<KeyValueLine> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value'", lineno, 1);
        auto trim = [](std::string s) {
            std::size_t a = s.find_first_not_of(" \t\r");
            std::size_t z = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, z - a + 1);
        };
        KeyValueLine kv{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), lineno};
        if (kv.key.empty()) throw ParseError("empty key", lineno, 1);
        out.push_back(std::move(kv));
    }
    return out;
}

// splits "[a, b, c]" at top level; polynomials contain no brackets or commas
inline std::vector<std::string> split_list(const std::string& value, int line) {
    std::string v = value;
    auto trim = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t");
        std::size_t z = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, z - a + 1);
    };
    v = trim(v);
    if (v.size() < 2 || v.front() != '[' || v.back() != ']')
        throw ParseError("expected a bracketed list", line, 1);
    v = v.substr(1, v.size() - 2);
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : v) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
    if (out.size() == 1 && out[0].empty()) out.clear();
    return out;
}

inline std::vector<std::vector<std::string>> split_matrix(const std::string& value,
                                                          int line) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : split_list(value, line))
        rows.push_back(split_list(row, line));
    return rows;
}

inline std::uint64_t parse_u64(const std::string& v, int line) {
    try {
        std::size_t used = 0;
        std::uint64_t x = std::stoull(v, &used);
        if (used != v.size()) throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        throw ParseError("expected an unsigned integer, got '" + v + "'", line, 1);
    }
}

inline int parse_int(const std::string& v, int line) {
    try {
        std::size_t used = 0;
        int x = std::stoi(v, &used);
        if (used != v.size()) throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + v + "'", line, 1);
    }
}

}  // namespace detail

inline InstanceFile parse_instance(const std::string& text) {
    InstanceFile f;
    bool have_s = false, have_a = false, have_p = false, have_f = false, have_h = false;
    for (const auto& kv : detail::read_key_values(text)) {
        if (kv.key == "prime") {
            f.prime = static_cast<std::uint32_t>(detail::parse_u64(kv.value, kv.line));
        } else if (kv.key == "s") {
            f.s = detail::parse_int(kv.value, kv.line);
            have_s = true;
        } else if (kv.key == "A") {
            f.a = detail::split_matrix(kv.value, kv.line);
            have_a = true;
        } else if (kv.key == "p_row") {
            f.p_row = detail::split_list(kv.value, kv.line);
            have_p = true;
        } else if (kv.key == "f_col") {
            f.f_col = detail::split_list(kv.value, kv.line);
            have_f = true;
        } else if (kv.key == "h") {
            f.h = kv.value;
            have_h = true;
        } else if (kv.key == "seed") {
            f.seed = detail::parse_u64(kv.value, kv.line);
        } else {
            throw ParseError("unknown key '" + kv.key + "'", kv.line, 1);
        }
    }
    if (!have_s) throw Error("instance file is missing 's'");
    if (!have_a) throw Error("instance file is missing 'A'");
    if (!have_p) throw Error("instance file is missing 'p_row'");
    if (!have_f) throw Error("instance file is missing 'f_col'");
    if (!have_h) throw Error("instance file is missing 'h'");
    return f;
}

inline ModuleFile parse_module_file(const std::string& text) {
    ModuleFile f;
    bool have_s = false, have_m = false;
    for (const auto& kv : detail::read_key_values(text)) {
        if (kv.key == "prime") {
            f.prime = static_cast<std::uint32_t>(detail::parse_u64(kv.value, kv.line));
        } else if (kv.key == "s") {
            f.s = detail::parse_int(kv.value, kv.line);
            have_s = true;
        } else if (kv.key == "M") {
            f.m = detail::split_matrix(kv.value, kv.line);
            have_m = true;
        } else if (kv.key == "seed") {
            f.seed = detail::parse_u64(kv.value, kv.line);
        } else {
            throw ParseError("unknown key '" + kv.key + "'", kv.line, 1);
        }
    }
    if (!have_s) throw Error("module file is missing 's'");
    if (!have_m) throw Error("module file is missing 'M'");
    return f;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

// Canonical emission (round-trips through parse_instance).
inline std::string emit_instance(const InstanceFile& f) {
    std::ostringstream out;
    out << "prime = " << f.prime << "\n";
    out << "s = " << f.s << "\n";
    out << "A = [";
    for (std::size_t i = 0; i < f.a.size(); ++i) {
        if (i) out << ", ";
        out << "[";
        for (std::size_t j = 0; j < f.a[i].size(); ++j) {
            if (j) out << ", ";
            out << f.a[i][j];
        }
        out << "]";
    }
    out << "]\n";
    auto list = [&out](const char* key, const std::vector<std::string>& v) {
        out << key << " = [";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out << ", ";
            out << v[i];
        }
        out << "]\n";
    };
    list("p_row", f.p_row);
    list("f_col", f.f_col);
    out << "h = " << f.h << "\n";
    if (f.seed) out << "seed = " << *f.seed << "\n";
    return out.str();
}

inline InstanceFile instance_from_bmatrix(const BMatrix& b,
                                          std::optional<std::uint64_t> seed = {}) {
    InstanceFile f;
    f.prime = b.prime();
    f.s = b.s();
    for (int i = 0; i < b.s(); ++i) {
        std::vector<std::string> row;
        for (int j = 0; j <= b.s(); ++j) row.push_back(b.hilbert_burch().at(i, j).str());
        f.a.push_back(std::move(row));
    }
    for (const auto& g : b.p_row()) f.p_row.push_back(g.str());
    for (const auto& g : b.f_col()) f.f_col.push_back(g.str());
    f.h = b.h().str();
    f.seed = seed;
    return f;
}

}  // namespace doubleplane
