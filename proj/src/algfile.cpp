#include "homquiver/algfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace homquiver {

namespace {

struct Cursor {
    const std::string& s;
    int line;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    int col() const { return static_cast<int>(pos) + 1; }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    void expect(char c, const std::string& what) {
        if (!eat(c)) throw ParseError("expected '" + std::string(1, c) + "' in " + what, line, col());
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        if (pos == start) throw ParseError("expected identifier", line, col());
        return s.substr(start, pos - start);
    }
    std::string number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        if (pos == start) throw ParseError("expected number", line, col());
        return s.substr(start, pos - start);
    }
};

std::vector<std::string> logical_lines(const std::string& text, std::vector<int>* line_numbers) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    int num = 0;
    while (std::getline(in, line)) {
        ++num;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(a, b - a + 1));
        line_numbers->push_back(num);
    }
    return out;
}

// combination := term (('+'|'-') term)*; term := [rational '*'] factor ('*' factor)*
// A side that is literally "0" means no terms.
std::vector<RelTerm> parse_side(Cursor& cur, const Quiver& q) {
    std::vector<RelTerm> terms;
    bool first = true;
    while (true) {
        int sign = 1;
        if (cur.eat('-')) sign = -1;
        else if (cur.eat('+')) sign = 1;
        else if (!first) break;
        first = false;
        RelTerm t;
        t.coeff = sign;
        cur.skip_ws();
        if (cur.pos < cur.s.size() && isdigit(static_cast<unsigned char>(cur.s[cur.pos]))) {
            std::string num = cur.number();
            Rat r = parse_rational(num);
            if (r == 0) {
                // literal zero: contributes no term, but nothing may follow it
                if (cur.peek() == '*') throw ParseError("zero coefficient", cur.line, cur.col());
                if (cur.done() || cur.peek() == '=' ) return terms;
                continue;
            }
            t.coeff = sign * r;
            cur.expect('*', "relation term");
        }
        while (true) {
            std::string name = cur.ident();
            int idx = q.arrow_index(name);
            if (idx < 0) throw ParseError("unknown arrow '" + name + "'", cur.line, cur.col());
            t.arrows.push_back(idx);
            if (!cur.eat('*')) break;
            // a trailing rational inside the product is not allowed; factors only
        }
        terms.push_back(std::move(t));
        char c = cur.peek();
        if (c != '+' && c != '-') break;
    }
    return terms;
}

}  // namespace

AlgebraDescription parse_algebra_text(const std::string& text) {
    AlgebraDescription d;
    std::vector<int> line_numbers;
    std::vector<std::string> lines = logical_lines(text, &line_numbers);

    bool have_vertices = false;
    std::vector<std::pair<std::string, int>> pending_relations;  // raw text + line

    for (size_t li = 0; li < lines.size(); ++li) {
        Cursor cur{lines[li], line_numbers[li]};
        std::string head = cur.ident();
        if (head == "vertices") {
            cur.expect(':', "vertices statement");
            while (!cur.done()) d.quiver.vertices.push_back(cur.ident());
            if (d.quiver.vertices.empty())
                throw ParseError("empty vertex list", cur.line, cur.col());
            have_vertices = true;
        } else if (head == "arrow") {
            if (!have_vertices) throw ParseError("arrow before vertices", cur.line, cur.col());
            Quiver::Arrow a;
            a.name = cur.ident();
            cur.expect(':', "arrow statement");
            std::string s = cur.ident();
            cur.expect('-', "arrow statement");
            cur.expect('>', "arrow statement");
            std::string t = cur.ident();
            a.src = d.quiver.vertex_index(s);
            a.tgt = d.quiver.vertex_index(t);
            if (a.src < 0) throw ParseError("unknown vertex '" + s + "'", cur.line, cur.col());
            if (a.tgt < 0) throw ParseError("unknown vertex '" + t + "'", cur.line, cur.col());
            d.quiver.arrows.push_back(a);
        } else if (head == "relation") {
            cur.expect(':', "relation statement");
            pending_relations.emplace_back(lines[li].substr(cur.pos), line_numbers[li]);
        } else if (head == "composition") {
            cur.expect(':', "composition statement");
            std::string mode;
            while (!cur.done()) {
                char c = cur.peek();
                if (isalnum(static_cast<unsigned char>(c))) mode += cur.ident();
                else { mode += c; ++cur.pos; }
            }
            if (mode == "right-to-left") d.convention = Convention::RightToLeft;
            else if (mode == "left-to-right") d.convention = Convention::LeftToRight;
            else throw ParseError("unknown composition convention '" + mode + "'", cur.line, cur.col());
        } else {
            throw ParseError("unknown directive '" + head + "'", line_numbers[li], 1);
        }
    }
    if (!have_vertices) throw ParseError("missing vertices statement", 1, 1);

    for (auto& [rtext, rline] : pending_relations) {
        Cursor cur{rtext, rline};
        Relation r;
        r.lhs = parse_side(cur, d.quiver);
        cur.expect('=', "relation");
        r.rhs = parse_side(cur, d.quiver);
        if (!cur.done()) throw ParseError("trailing input in relation", cur.line, cur.col());
        r.text = rtext;
        d.relations.push_back(std::move(r));
    }
    return d;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

AlgebraDescription parse_algebra_file(const std::string& path) {
    return parse_algebra_text(read_file(path));
}

LieAlgebra parse_lie_text(const std::string& text) {
    std::vector<int> line_numbers;
    std::vector<std::string> lines = logical_lines(text, &line_numbers);

    LieAlgebra a;
    a.name = "file";
    bool have_dim = false;
    std::vector<std::tuple<std::string, std::string, std::string, int>> brackets;

    for (size_t li = 0; li < lines.size(); ++li) {
        Cursor cur{lines[li], line_numbers[li]};
        std::string head = cur.ident();
        if (head == "lie") {
            cur.expect(':', "lie statement");
            a.dim = std::stoi(cur.number());
            have_dim = true;
        } else if (head == "basis") {
            cur.expect(':', "basis statement");
            while (!cur.done()) a.basis_names.push_back(cur.ident());
        } else if (head == "bracket") {
            std::string x = cur.ident();
            std::string y = cur.ident();
            cur.expect(':', "bracket statement");
            brackets.emplace_back(x, y, lines[li].substr(cur.pos), line_numbers[li]);
        } else {
            throw ParseError("unknown directive '" + head + "'", line_numbers[li], 1);
        }
    }
    if (!have_dim) throw ParseError("missing lie statement", 1, 1);
    if (a.basis_names.empty())
        for (int i = 0; i < a.dim; ++i) a.basis_names.push_back("x" + std::to_string(i + 1));
    if (static_cast<int>(a.basis_names.size()) != a.dim)
        throw ParseError("basis size does not match dimension", 1, 1);

    auto name_index = [&](const std::string& n, int line, int col) {
        for (int i = 0; i < a.dim; ++i)
            if (a.basis_names[i] == n) return i;
        throw ParseError("unknown basis element '" + n + "'", line, col);
    };

    a.c.assign(a.dim, std::vector<Vec>(a.dim, Vec(a.dim)));
    for (auto& [x, y, expr, line] : brackets) {
        int i = name_index(x, line, 1), j = name_index(y, line, 1);
        Cursor cur{expr, line};
        // combination of basis names with rational coefficients, or 0
        Vec value(a.dim);
        bool first = true;
        while (!cur.done()) {
            int sign = 1;
            if (cur.eat('-')) sign = -1;
            else if (cur.eat('+')) sign = 1;
            else if (!first) throw ParseError("expected '+' or '-'", cur.line, cur.col());
            first = false;
            Rat coeff = sign;
            cur.skip_ws();
            if (cur.pos < cur.s.size() && isdigit(static_cast<unsigned char>(cur.s[cur.pos]))) {
                Rat r = parse_rational(cur.number());
                if (r == 0 && cur.peek() != '*') continue;
                coeff = sign * r;
                if (!cur.eat('*')) throw ParseError("expected '*' after coefficient", cur.line, cur.col());
            }
            int k = name_index(cur.ident(), cur.line, cur.col());
            value[k] += coeff;
        }
        for (int k = 0; k < a.dim; ++k) {
            a.c[i][j][k] = value[k];
            a.c[j][i][k] = -value[k];
        }
    }
    a.validate();
    return a;
}

LieAlgebra parse_lie_file(const std::string& path) { return parse_lie_text(read_file(path)); }

}  // namespace homquiver
