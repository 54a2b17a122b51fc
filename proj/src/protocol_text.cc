// Copyright 2026 The entlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entlab/protocol_text.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "entlab/errors.h"

namespace entlab {

namespace {

std::string upper(std::string s) {
    for (char &ch : s) {
        ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    }
    return s;
}

std::string trim(const std::string &s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string &s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

int parse_int(const std::string &tok, int line, const char *what) {
    int v = 0;
    const char *b = tok.data();
    const char *e = b + tok.size();
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e || v < 0) {
        throw ParseError(line, std::string("expected non-negative integer ") + what + ", got '" + tok + "'");
    }
    return v;
}

int parse_cbit(const std::string &tok, int line) {
    if (tok.size() < 2 || (tok[0] != 'c' && tok[0] != 'C')) {
        throw ParseError(line, "expected classical bit 'cK', got '" + tok + "'");
    }
    return parse_int(tok.substr(1), line, "classical bit");
}

void append_qubit_list(const std::string &tok, int line, std::vector<int> &out) {
    size_t dots = tok.find("..");
    if (dots == std::string::npos) {
        out.push_back(parse_int(tok, line, "qubit"));
        return;
    }
    int a = parse_int(tok.substr(0, dots), line, "range start");
    int b = parse_int(tok.substr(dots + 2), line, "range end");
    if (b < a) {
        throw ParseError(line, "descending range '" + tok + "'");
    }
    for (int q = a; q <= b; q++) {
        out.push_back(q);
    }
}

Gate parse_gate(const std::vector<std::string> &toks, int line) {
    std::string name = upper(toks[0]);
    auto kind = gate_kind_from_name(name);
    if (!kind) {
        throw ParseError(line, "unknown gate '" + toks[0] + "'");
    }
    auto need = [&](size_t operands) {
        if (toks.size() != operands + 1) {
            throw ParseError(line, std::string(gate_name(*kind)) + " takes " + std::to_string(operands) +
                                       " operands, got " + std::to_string(toks.size() - 1));
        }
    };
    switch (*kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::Z:
        case GateKind::S:
        case GateKind::T:
            need(1);
            return Gate{*kind, {parse_int(toks[1], line, "qubit")}, -1, {}};
        case GateKind::CNOT: {
            need(2);
            int c = parse_int(toks[1], line, "qubit");
            int t = parse_int(toks[2], line, "qubit");
            if (c == t) {
                throw ParseError(line, "CNOT control equals target");
            }
            return Gate::cnot(c, t);
        }
        case GateKind::TOFFOLI: {
            need(3);
            int c1 = parse_int(toks[1], line, "qubit");
            int c2 = parse_int(toks[2], line, "qubit");
            int t = parse_int(toks[3], line, "qubit");
            if (c1 == c2 || c1 == t || c2 == t) {
                throw ParseError(line, "TOFFOLI operands must be distinct");
            }
            return Gate::toffoli(c1, c2, t);
        }
        case GateKind::CCX:
        case GateKind::CCZ:
            need(2);
            return Gate{*kind, {parse_int(toks[2], line, "qubit")}, parse_cbit(toks[1], line), {}};
        case GateKind::ORACLE: {
            if (toks.size() < 3) {
                throw ParseError(line, "ORACLE needs a handle and at least one qubit");
            }
            std::vector<int> qs;
            for (size_t i = 2; i < toks.size(); i++) {
                append_qubit_list(toks[i], line, qs);
            }
            return Gate::oracle_call(toks[1], std::move(qs));
        }
    }
    throw ParseError(line, "unknown gate '" + toks[0] + "'");
}

void parse_header(const std::string &text, int line, LoccProtocol &p) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ';') {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(trim(cur));
    auto head = split_ws(parts[0]);
    if (head.size() != 2 || upper(head[0]) != "LOCC" || upper(head[1]) != "V1") {
        throw ParseError(line, "expected header 'LOCC v1; ...'");
    }
    struct Field {
        const char *key;
        int *dst;
        bool seen = false;
    };
    Field fields[] = {{"NA", &p.n_a}, {"NB", &p.n_b}, {"TA", &p.t_a}, {"TB", &p.t_b},
                      {"C", &p.c},    {"MA", &p.m_a}, {"MB", &p.m_b}};
    for (size_t i = 1; i < parts.size(); i++) {
        if (parts[i].empty()) {
            continue;
        }
        size_t eq = parts[i].find('=');
        if (eq == std::string::npos) {
            throw ParseError(line, "expected key=value, got '" + parts[i] + "'");
        }
        std::string key = upper(trim(parts[i].substr(0, eq)));
        std::string value = trim(parts[i].substr(eq + 1));
        auto it = std::find_if(std::begin(fields), std::end(fields), [&](const Field &f) { return key == f.key; });
        if (it == std::end(fields)) {
            throw ParseError(line, "unknown header field '" + key + "'");
        }
        if (it->seen) {
            throw ParseError(line, "duplicate header field '" + key + "'");
        }
        it->seen = true;
        *it->dst = parse_int(value, line, it->key);
    }
    for (const auto &f : fields) {
        if (!f.seen) {
            throw ParseError(line, std::string("missing header field '") + f.key + "'");
        }
    }
}

std::string qubit_list(const std::vector<int> &qs) {
    std::string out;
    size_t i = 0;
    while (i < qs.size()) {
        size_t j = i;
        while (j + 1 < qs.size() && qs[j + 1] == qs[j] + 1) {
            j++;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += std::to_string(qs[i]);
        if (j > i) {
            out += ".." + std::to_string(qs[j]);
        }
        i = j + 1;
    }
    return out;
}

std::string gate_line(const Gate &g) {
    std::string out = gate_name(g.kind);
    switch (g.kind) {
        case GateKind::CCX:
        case GateKind::CCZ:
            return out + " c" + std::to_string(g.cbit) + " " + std::to_string(g.qubits.at(0));
        case GateKind::ORACLE:
            return out + " " + g.oracle + " " + qubit_list(g.qubits);
        default:
            for (int q : g.qubits) {
                out += " " + std::to_string(q);
            }
            return out;
    }
}

}  // namespace

LoccProtocol parse_protocol(const std::string &text, OracleRegistryPtr oracles) {
    LoccProtocol p;
    p.oracles = oracles;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    bool have_header = false;
    int header_line = 0;
    LocalCircuit *current = nullptr;
    char side = 0;
    while (std::getline(in, raw)) {
        line++;
        size_t hash = raw.find('#');
        std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (s.empty()) {
            continue;
        }
        if (!have_header) {
            parse_header(s, line, p);
            have_header = true;
            header_line = line;
            continue;
        }
        auto toks = split_ws(s);
        std::string kw = upper(toks[0]);
        if (kw == "ROUND") {
            if (toks.size() != 2) {
                throw ParseError(line, "expected 'ROUND k'");
            }
            int k = parse_int(toks[1], line, "round number");
            if (k != static_cast<int>(p.rounds.size()) + 1) {
                throw ParseError(line, "rounds must be numbered 1, 2, ... in order; got " + toks[1]);
            }
            Round r;
            r.a.width = p.width_a();
            r.b.width = p.width_b();
            p.rounds.push_back(std::move(r));
            current = nullptr;
            side = 0;
            continue;
        }
        if (kw == "A:" || kw == "B:") {
            if (toks.size() != 1) {
                throw ParseError(line, "gates start on the line after '" + kw + "'");
            }
            if (p.rounds.empty()) {
                throw ParseError(line, "'" + kw + "' outside a ROUND block");
            }
            char next = kw[0];
            if ((next == 'A' && side != 0) || (next == 'B' && side == 'B')) {
                throw ParseError(line, "expected A: then B: once per round");
            }
            side = next;
            current = next == 'A' ? &p.rounds.back().a : &p.rounds.back().b;
            continue;
        }
        if (current == nullptr) {
            throw ParseError(line, "gate outside an A: or B: block");
        }
        Gate g = parse_gate(toks, line);
        for (int q : g.qubits) {
            if (q >= current->width) {
                throw ParseError(line, "qubit " + std::to_string(q) + " outside circuit width " +
                                           std::to_string(current->width));
            }
        }
        if ((g.kind == GateKind::CCX || g.kind == GateKind::CCZ) && g.cbit >= p.c) {
            throw ParseError(line, "classical bit c" + std::to_string(g.cbit) + " outside register of width " +
                                       std::to_string(p.c));
        }
        if (g.kind == GateKind::ORACLE) {
            std::vector<int> sorted = g.qubits;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                throw ParseError(line, "repeated qubit in ORACLE operands");
            }
            if (oracles != nullptr) {
                const OracleEntry *e = oracles->find(g.oracle);
                if (e == nullptr) {
                    throw ParseError(line, "unknown oracle handle '" + g.oracle + "'");
                }
                if (static_cast<size_t>(e->width) != g.qubits.size()) {
                    throw ParseError(line, "oracle '" + g.oracle + "' has width " + std::to_string(e->width));
                }
            }
        }
        current->add(std::move(g));
    }
    if (!have_header) {
        throw ParseError(line == 0 ? 1 : line, "missing 'LOCC v1' header");
    }
    if (p.rounds.empty()) {
        throw ParseError(line, "protocol has no ROUND block");
    }
    if (p.m_a > p.n_a + p.t_a || p.m_b > p.n_b + p.t_b) {
        throw ParseError(header_line, "output count exceeds register size");
    }
    return p;
}

std::string serialize_protocol(const LoccProtocol &p) {
    std::ostringstream out;
    out << "LOCC v1; nA=" << p.n_a << "; nB=" << p.n_b << "; tA=" << p.t_a << "; tB=" << p.t_b << "; c=" << p.c
        << "; mA=" << p.m_a << "; mB=" << p.m_b << "\n";
    for (size_t r = 0; r < p.rounds.size(); r++) {
        out << "ROUND " << (r + 1) << "\n";
        out << "A:\n";
        for (const Gate &g : p.rounds[r].a.gates) {
            out << "  " << gate_line(g) << "\n";
        }
        out << "B:\n";
        for (const Gate &g : p.rounds[r].b.gates) {
            out << "  " << gate_line(g) << "\n";
        }
    }
    return out.str();
}

}  // namespace entlab
