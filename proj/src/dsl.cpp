#include "lcskt/dsl.hpp"

#include <cctype>
#include <sstream>

namespace lcskt {

namespace {

// Cursor with line/column tracking over one logical line.
struct Cursor {
    const std::string& text;
    size_t pos = 0;
    int line;

    Cursor(const std::string& t, int line_) : text(t), line(line_) {}

    int col() const { return static_cast<int>(pos) + 1; }
    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    char get() { return done() ? '\0' : text[pos++]; }
    void skip_ws() {
        while (!done() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    void expect(char c, const std::string& what) {
        skip_ws();
        if (peek() != c) throw ParseError(line, col(), what);
        ++pos;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line, col(), what); }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

std::string read_identifier(Cursor& cur) {
    std::string name;
    while (!cur.done() && ident_char(cur.peek())) name += cur.get();
    return name;
}

Rat read_unsigned_rational(Cursor& cur) {
    std::string num;
    while (std::isdigit(static_cast<unsigned char>(cur.peek()))) num += cur.get();
    if (num.empty()) cur.fail("number");
    std::string den;
    if (cur.peek() == '/') {
        cur.get();
        while (std::isdigit(static_cast<unsigned char>(cur.peek()))) den += cur.get();
        if (den.empty()) cur.fail("denominator");
        if (Rat(den) == 0) cur.fail("nonzero denominator");
    }
    Rat r(num + (den.empty() ? "" : "/" + den));
    r.canonicalize();
    return r;
}

// rational | (re,im) | identifier; sign handled by the caller.
Scalar read_coefficient(Cursor& cur, const ParamMap& params) {
    cur.skip_ws();
    if (cur.peek() == '(') {
        cur.get();
        cur.skip_ws();
        bool neg_re = false;
        if (cur.peek() == '-') {
            neg_re = true;
            cur.get();
        }
        Rat re = read_unsigned_rational(cur);
        cur.expect(',', "','");
        cur.skip_ws();
        bool neg_im = false;
        if (cur.peek() == '-') {
            neg_im = true;
            cur.get();
        }
        Rat im = read_unsigned_rational(cur);
        cur.expect(')', "')'");
        return Scalar(neg_re ? Rat(-re) : re, neg_im ? Rat(-im) : im);
    }
    if (ident_start(cur.peek())) {
        std::string name = read_identifier(cur);
        auto it = params.find(name);
        if (it == params.end()) throw UnboundParam(name);
        return it->second;
    }
    return Scalar(read_unsigned_rational(cur));
}

// A sum of terms [sign][coeff*]<monomial>; monomial reading is supplied so
// real and complex entries share the expression shape.
template <class MonoReader>
KForm read_sum(Cursor& cur, const ParamMap& params, int dim, MonoReader read_mono) {
    KForm total(dim, 2);
    cur.skip_ws();
    bool first = true;
    while (true) {
        cur.skip_ws();
        int sign = 1;
        if (cur.peek() == '+' || cur.peek() == '-') {
            if (cur.get() == '-') sign = -1;
        } else if (!first) {
            break;
        }
        cur.skip_ws();
        if (first && sign > 0 && cur.peek() == '0') {
            // A literal zero entry; nothing may follow inside the entry.
            cur.get();
            cur.skip_ws();
            if (cur.peek() == '+' || cur.peek() == '-' || std::isdigit(static_cast<unsigned char>(cur.peek())))
                cur.fail("end of entry after 0");
            return total;
        }
        Scalar coeff(1);
        bool have_coeff = false;
        if (cur.peek() == '(' || ident_start(cur.peek())) {
            coeff = read_coefficient(cur, params);
            have_coeff = true;
        } else if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            // Could be a rational coefficient (followed by '*') or a monomial.
            size_t save = cur.pos;
            Rat r = read_unsigned_rational(cur);
            cur.skip_ws();
            if (cur.peek() == '*') {
                coeff = Scalar(r);
                have_coeff = true;
            } else {
                cur.pos = save;
            }
        }
        if (have_coeff) {
            cur.skip_ws();
            if (cur.peek() == '*') cur.get();
            cur.skip_ws();
        }
        if (sign < 0) coeff = -coeff;
        total += read_mono(cur, coeff);
        first = false;
    }
    return total;
}

int read_digit_index(Cursor& cur) {
    if (!std::isdigit(static_cast<unsigned char>(cur.peek())) || cur.peek() == '0')
        cur.fail("index 1..9");
    return cur.get() - '0';
}

struct Lines {
    std::vector<std::pair<int, std::string>> content;  // (line number, stripped text)
    ParamMap params;
};

Lines split_lines(const std::string& text, const ParamMap& external) {
    Lines out;
    out.params = external;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        size_t begin = raw.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        size_t end = raw.find_last_not_of(" \t\r");
        std::string body = raw.substr(begin, end - begin + 1);
        if (body.rfind("param", 0) == 0 && body.size() > 5 &&
            !ident_char(body[5]) /* not an identifier like "params" */) {
            Cursor cur(body, lineno);
            cur.pos = 5;
            cur.skip_ws();
            std::string name = read_identifier(cur);
            if (name.empty()) cur.fail("parameter name");
            cur.expect('=', "'='");
            cur.skip_ws();
            std::string value = body.substr(cur.pos);
            auto scalar = parse_scalar_literal(value);
            if (!scalar) cur.fail("rational or (re,im) value");
            // External bindings win.
            if (!external.count(name)) out.params[name] = *scalar;
            continue;
        }
        out.content.emplace_back(lineno, body);
    }
    return out;
}

}  // namespace

std::optional<Scalar> parse_scalar_literal(const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != ' ' && c != '\t') t += c;
    if (t.empty()) return std::nullopt;
    if (t.front() == '(') {
        if (t.back() != ')') return std::nullopt;
        std::string inner = t.substr(1, t.size() - 2);
        size_t comma = inner.find(',');
        if (comma == std::string::npos) return std::nullopt;
        auto re = parse_rational(inner.substr(0, comma));
        auto im = parse_rational(inner.substr(comma + 1));
        if (!re || !im) return std::nullopt;
        return Scalar(*re, *im);
    }
    auto r = parse_rational(t);
    if (!r) return std::nullopt;
    return Scalar(*r);
}

LieAlgebra parse_real_dsl(const std::string& text, const ParamMap& params) {
    Lines lines = split_lines(text, params);
    if (lines.content.size() != 1) throw ParseError(1, 1, "exactly one algebra tuple");
    auto [lineno, body] = lines.content[0];
    Cursor cur(body, lineno);
    cur.expect('(', "'('");
    std::vector<std::string> entries;
    // Split on top-level commas first to learn the dimension.
    {
        int depth = 0;
        std::string current;
        for (char c : body.substr(cur.pos)) {
            if (c == '(') ++depth;
            if (c == ')' && depth-- == 0) {
                entries.push_back(current);
                current.clear();
                break;
            }
            if (c == ',' && depth == 0) {
                entries.push_back(current);
                current.clear();
                continue;
            }
            current += c;
        }
    }
    size_t consumed = cur.pos;
    int dim = static_cast<int>(entries.size());
    if (dim < 1 || dim > 9) throw ParseError(lineno, cur.col(), "1 to 9 entries");
    // Verify the tuple closes properly.
    {
        int depth = 0;
        bool closed = false;
        for (size_t i = cur.pos; i < body.size(); ++i) {
            if (body[i] == '(') ++depth;
            if (body[i] == ')') {
                if (depth == 0) {
                    closed = true;
                    consumed = i + 1;
                    break;
                }
                --depth;
            }
        }
        if (!closed) throw ParseError(lineno, static_cast<int>(body.size()) + 1, "')'");
        for (size_t i = consumed; i < body.size(); ++i)
            if (body[i] != ' ' && body[i] != '\t')
                throw ParseError(lineno, static_cast<int>(i) + 1, "end of input");
    }
    std::vector<KForm> d1;
    for (const std::string& entry : entries) {
        Cursor ec(entry, lineno);
        auto mono = [dim](Cursor& c, const Scalar& coeff) {
            int i = read_digit_index(c);
            int j = read_digit_index(c);
            if (i > dim || j > dim) c.fail("index within dimension");
            if (i == j) c.fail("distinct indices");
            return KForm::monomial(dim, {i, j}, coeff);
        };
        KForm f = read_sum(ec, lines.params, dim, mono);
        ec.skip_ws();
        if (!ec.done()) ec.fail("end of entry");
        if (!f.is_real()) throw ParseError(lineno, 1, "real coefficients in a real tuple");
        d1.push_back(std::move(f));
    }
    return LieAlgebra::from_differentials(std::move(d1));
}

ComplexEquations parse_complex_dsl(const std::string& text, const ParamMap& params) {
    Lines lines = split_lines(text, params);
    if (lines.content.empty()) throw ParseError(1, 1, "structure equation lines");
    // Lines "dk = entry"; highest k determines n.
    std::map<int, std::pair<int, std::string>> per_index;
    int n = 0;
    for (auto& [lineno, body] : lines.content) {
        Cursor cur(body, lineno);
        cur.skip_ws();
        if (cur.get() != 'd') cur.fail("'d'");
        int k = read_digit_index(cur);
        cur.expect('=', "'='");
        if (per_index.count(k)) cur.fail("single equation per index");
        per_index[k] = {lineno, body.substr(cur.pos)};
        n = std::max(n, k);
    }
    if (n < 2 || n > 4) throw ParseError(lines.content[0].first, 1, "complex dimension 2..4");
    ComplexEquations eqs;
    eqs.n = n;
    eqs.d_omega.assign(n, KForm(2 * n, 2));
    for (auto& [k, entry] : per_index) {
        Cursor ec(entry.second, entry.first);
        auto mono = [n](Cursor& c, const Scalar& coeff) {
            auto one_index = [&c, n]() {
                int i = read_digit_index(c);
                if (i > n) c.fail("index within complex dimension");
                if (c.peek() == '\'') {
                    c.get();
                    return n + i;
                }
                return i;
            };
            int i = one_index();
            int j = one_index();
            if (i == j) c.fail("distinct indices");
            return KForm::monomial(2 * n, {i, j}, coeff);
        };
        KForm f = read_sum(ec, lines.params, 2 * n, mono);
        ec.skip_ws();
        if (!ec.done()) ec.fail("end of equation");
        eqs.d_omega[k - 1] = std::move(f);
    }
    return eqs;
}

ParsedInput parse_input(const std::string& text, const ParamMap& external) {
    Lines lines = split_lines(text, external);
    ParsedInput out;
    out.params = lines.params;
    if (lines.content.empty()) throw ParseError(1, 1, "an algebra description");
    if (lines.content[0].second[0] == '(') {
        out.real = parse_real_dsl(text, external);
    } else {
        out.complex_eqs = parse_complex_dsl(text, external);
    }
    return out;
}

RealifiedStructure build_from_complex(const ComplexEquations& eqs) {
    try {
        return realify(eqs);
    } catch (const JacobiViolation&) {
        throw InvalidParams("structure equations violate d^2 = 0; check parameter constraints");
    }
}

std::string print_real_dsl(const LieAlgebra& g) { return g.str(); }

std::string form_to_complex_dsl(const KForm& form, int n) {
    if (form.is_zero()) return "0";
    std::vector<Mask> order;
    for (const auto& [m, c] : form.terms()) order.push_back(m);
    std::sort(order.begin(), order.end(), mask_lex_less);
    std::ostringstream out;
    bool first = true;
    for (Mask m : order) {
        Scalar c = form.terms().at(m);
        std::string mono;
        for (int i : mask_indices(m)) {
            if (i <= n) {
                mono += static_cast<char>('0' + i);
            } else {
                mono += static_cast<char>('0' + (i - n));
                mono += '\'';
            }
        }
        if (c.is_real()) {
            Rat mag = abs(c.re);
            out << (sgn(c.re) < 0 ? "-" : (first ? "" : "+"));
            if (mag == 1 && !mono.empty())
                out << mono;
            else
                out << mag.get_str() << (mono.empty() ? "" : "*" + mono);
        } else {
            if (!first) out << "+";
            out << "(" << c.re.get_str() << "," << c.im.get_str() << ")";
            if (!mono.empty()) out << "*" << mono;
        }
        first = false;
    }
    return out.str();
}

std::string print_complex_dsl(const ComplexEquations& eqs) {
    std::ostringstream out;
    for (int k = 1; k <= eqs.n; ++k) {
        if (k > 1) out << "\n";
        out << "d" << k << " = " << form_to_complex_dsl(eqs.d_omega[k - 1], eqs.n);
    }
    return out.str();
}

}  // namespace lcskt
