#include "dox/problem.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "dox/error.hpp"

namespace dox {

namespace {

struct State {
    bool have_field = false;
    Field field = Field::Q;
    bool have_gens = false;
    Alphabet alpha;
    std::map<std::string, Letter> letter;
    bool have_p12 = false, have_p11 = false;
    std::set<Letter> sigma_seen, nu_seen;
};

Error parse_at(int line, std::size_t col, const std::string& msg, const std::string& kind = "ParseError") {
    return parse_error(kind, "line " + std::to_string(line) + ", column " + std::to_string(col + 1) + ": " + msg);
}

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Cursor over one line. Expressions are sums of products of scalar atoms and
// generator names; the result is a map from words to coefficients.
class Cursor {
public:
    Cursor(const std::string& s, int line, const State& st) : s_(s), line_(line), st_(st) {}

    std::size_t pos() const { return pos_; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip();
        return pos_ >= s_.size();
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    Error fail(const std::string& msg) { return parse_at(line_, pos_, msg); }
    void expect(char c) {
        if (peek() != c) throw fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    void expect_end() {
        if (!at_end()) throw fail("expected end of line");
    }

    std::string name() {
        skip();
        if (pos_ >= s_.size() || !name_start(s_[pos_])) throw fail("expected a name");
        std::size_t b = pos_;
        while (pos_ < s_.size() && name_char(s_[pos_])) ++pos_;
        return s_.substr(b, pos_ - b);
    }

    mpz_class integer() {
        skip();
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (b == pos_) throw fail("expected an integer");
        return mpz_class(s_.substr(b, pos_ - b));
    }

    Tensor::Terms expr() {
        Tensor::Terms out;
        bool first = true;
        while (true) {
            char c = peek();
            Scalar sign(1);
            if (c == '+' || c == '-') {
                if (c == '-') sign = Scalar(-1);
                ++pos_;
            } else if (!first) {
                break;
            }
            auto [w, coef] = term();
            coef *= sign;
            Scalar& slot = out[w];
            slot += coef;
            if (slot.is_zero()) out.erase(w);
            first = false;
            c = peek();
            if (c != '+' && c != '-') {
                if (c == '\0' || c == ',' || c == ']' || c == ')') break;
                throw fail("expected '*', '+', '-' or end of expression");
            }
        }
        return out;
    }

    Tensor tensor_of_degree(int degree) {
        std::size_t start = pos_;
        Tensor::Terms terms = expr();
        Tensor t(degree);
        for (const auto& [w, c] : terms) {
            if (int(w.size()) != degree)
                throw parse_at(line_, start, "expected an expression of degree " + std::to_string(degree));
            t.add_term(w, c);
        }
        return t;
    }

    Scalar scalar() { return tensor_of_degree(0).coeff(Word{}); }

private:
    std::pair<Word, Scalar> term() {
        Word w;
        Scalar coef(1);
        factor(w, coef);
        while (peek() == '*') {
            ++pos_;
            factor(w, coef);
        }
        return {w, coef};
    }

    void factor(Word& w, Scalar& coef) {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = integer();
            mpz_class den = 1;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                std::size_t at = pos_;
                den = integer();
                if (den == 0) throw parse_at(line_, at, "zero denominator");
            }
            coef *= Scalar(mpq_class(num, den));
            return;
        }
        if (c == '(') {
            ++pos_;
            Tensor inner = tensor_of_degree(0);
            expect(')');
            coef *= inner.coeff(Word{});
            return;
        }
        if (name_start(c)) {
            std::size_t at = pos_;
            std::string nm = name();
            if (nm == "i") {
                if (st_.field != Field::QI)
                    throw parse_at(line_, at, "'i' used under field Q", "FieldMismatch");
                coef *= Scalar::I();
                return;
            }
            auto it = st_.letter.find(nm);
            if (it == st_.letter.end()) throw parse_at(line_, at, "unknown generator '" + nm + "'");
            w.push_back(it->second);
            return;
        }
        throw fail("expected a number, 'i', '(' or a generator");
    }

    const std::string& s_;
    int line_;
    const State& st_;
    std::size_t pos_ = 0;
};

Letter generator_ref(Cursor& c, const State& st, int line) {
    c.skip();
    std::size_t at = c.pos();
    std::string nm = c.name();
    auto it = st.letter.find(nm);
    if (it == st.letter.end()) throw parse_at(line, at, "unknown generator '" + nm + "'");
    return it->second;
}

}  // namespace

ProblemSpec parse_problem(const std::string& text) {
    ProblemSpec spec;
    State st;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw.substr(0, raw.find('#'));
        Cursor c(s, line, st);
        if (c.at_end()) continue;
        std::size_t kw_at = c.pos();
        std::string kw = c.name();
        auto need = [&](bool ok, const std::string& what) {
            if (!ok) throw parse_at(line, kw_at, what);
        };
        if (kw == "field") {
            need(!st.have_field, "duplicate 'field' line");
            c.skip();
            std::string rest = s.substr(c.pos());
            while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.pop_back();
            if (rest == "Q")
                st.field = Field::Q;
            else if (rest == "Q(i)")
                st.field = Field::QI;
            else
                throw c.fail("expected 'Q' or 'Q(i)'");
            st.have_field = true;
            spec.pres.field = st.field;
        } else if (kw == "gens") {
            need(st.have_field, "'field' must come before 'gens'");
            need(!st.have_gens, "duplicate 'gens' line");
            while (!c.at_end()) {
                std::size_t at = c.pos();
                std::string nm = c.name();
                if (nm == "i" || nm == "y1" || nm == "y2")
                    throw parse_at(line, at, "reserved generator name '" + nm + "'");
                if (st.letter.count(nm)) throw parse_at(line, at, "duplicate generator '" + nm + "'");
                st.letter.emplace(nm, Letter(st.alpha.size()));
                st.alpha.names.push_back(nm);
            }
            if (st.alpha.size() == 0) throw c.fail("expected at least one generator");
            if (st.alpha.size() > 200) throw c.fail("too many generators");
            st.have_gens = true;
            spec.ext.sigma = BlockMap(2, 2, 1, 1);
            spec.ext.delta = BlockMap(2, 1, 1, 2);
        } else if (kw == "rel") {
            need(st.have_gens, "'gens' must come before 'rel'");
            spec.relations.push_back(c.tensor_of_degree(2));
            c.expect_end();
        } else if (kw == "p12" || kw == "p11") {
            need(st.have_field, "'field' must come before '" + kw + "'");
            bool& have = kw == "p12" ? st.have_p12 : st.have_p11;
            need(!have, "duplicate '" + kw + "' line");
            Scalar v = c.scalar();
            c.expect_end();
            (kw == "p12" ? spec.ext.p12 : spec.ext.p11) = v;
            have = true;
        } else if (kw == "sigma") {
            need(st.have_gens, "'gens' must come before 'sigma'");
            Letter g = generator_ref(c, st, line);
            if (!st.sigma_seen.insert(g).second) throw parse_at(line, kw_at, "duplicate sigma for generator");
            c.expect('=');
            c.expect('[');
            for (int i = 0; i < 2; ++i) {
                if (i) c.expect(',');
                c.expect('[');
                for (int j = 0; j < 2; ++j) {
                    if (j) c.expect(',');
                    spec.ext.sigma.at(i, j).set(Word{g}, c.tensor_of_degree(1));
                }
                c.expect(']');
            }
            c.expect(']');
            c.expect_end();
        } else if (kw == "nu") {
            need(st.have_gens, "'gens' must come before 'nu'");
            Letter g = generator_ref(c, st, line);
            if (!st.nu_seen.insert(g).second) throw parse_at(line, kw_at, "duplicate nu for generator");
            c.expect('=');
            c.expect('[');
            for (int i = 0; i < 2; ++i) {
                if (i) c.expect(',');
                spec.ext.delta.at(i, 0).set(Word{g}, c.tensor_of_degree(2));
            }
            c.expect(']');
            c.expect_end();
        } else if (kw == "degree" || kw == "randomized") {
            mpz_class v = c.integer();
            c.expect_end();
            if (v > 64 && kw == "degree") throw parse_at(line, kw_at, "degree bound too large");
            if (v > 10000) throw parse_at(line, kw_at, "value too large");
            (kw == "degree" ? spec.degree : spec.randomized) = int(v.get_si());
        } else {
            throw parse_at(line, kw_at, "unknown keyword '" + kw + "'");
        }
    }
    ++line;
    if (!st.have_field) throw parse_at(line, 0, "missing 'field' line");
    if (!st.have_gens) throw parse_at(line, 0, "missing 'gens' line");
    if (!st.have_p12) throw parse_at(line, 0, "missing 'p12' line");
    if (!st.have_p11) throw parse_at(line, 0, "missing 'p11' line");
    for (std::size_t g = 0; g < st.alpha.size(); ++g)
        if (!st.sigma_seen.count(Letter(g)))
            throw parse_at(line, 0, "missing sigma for generator '" + st.alpha.names[g] + "'");
    spec.pres.alpha = st.alpha;
    spec.pres.R = Subspace::span(Ambient{int(st.alpha.size()), 2}, spec.relations);
    return spec;
}

Tensor parse_tensor(const std::string& expr, const Alphabet& alpha, Field field, int degree) {
    State st;
    st.field = field;
    st.alpha = alpha;
    for (std::size_t k = 0; k < alpha.size(); ++k) st.letter.emplace(alpha.names[k], Letter(k));
    Cursor c(expr, 1, st);
    Tensor t = c.tensor_of_degree(degree);
    c.expect_end();
    return t;
}

ProblemSpec parse_problem_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw parse_error("IOError", "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_problem(ss.str());
}

std::string tensor_expr(const Tensor& t, const Alphabet& alpha) {
    if (t.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : t.terms()) {
        bool neg = false;
        Scalar a = c;
        // Pull a leading minus out when the coefficient has a single nonzero part.
        if ((a.is_real() && a.re < 0) || (sgn(a.re) == 0 && a.im < 0)) {
            neg = true;
            a = -a;
        }
        std::string coef;
        if (!a.is_one()) {
            coef = a.str();
            if (sgn(a.re) != 0 && sgn(a.im) != 0) coef = "(" + coef + ")";
        }
        std::string body = alpha.word_str(w, "*");
        std::string piece;
        if (w.empty())
            piece = coef.empty() ? "1" : coef;
        else
            piece = coef.empty() ? body : coef + "*" + body;
        if (first)
            out = (neg ? "-" : "") + piece;
        else
            out += (neg ? " - " : " + ") + piece;
        first = false;
    }
    return out;
}

std::string emit_problem(const ProblemSpec& spec) {
    const Alphabet& a = spec.pres.alpha;
    std::ostringstream o;
    o << "field " << (spec.pres.field == Field::QI ? "Q(i)" : "Q") << "\n";
    o << "gens";
    for (const auto& n : a.names) o << " " << n;
    o << "\n";
    for (const Tensor& r : spec.relations) o << "rel " << tensor_expr(r, a) << "\n";
    auto scalar = [&](const Scalar& s) { return tensor_expr(Tensor(Word{}, s), a); };
    o << "p12 " << scalar(spec.ext.p12) << "\n";
    o << "p11 " << scalar(spec.ext.p11) << "\n";
    for (std::size_t g = 0; g < a.size(); ++g) {
        Word w{Letter(g)};
        auto e = [&](int i, int j) { return tensor_expr(spec.ext.sigma.at(i, j)(w), a); };
        o << "sigma " << a.names[g] << " = [[" << e(0, 0) << ", " << e(0, 1) << "], [" << e(1, 0) << ", " << e(1, 1)
          << "]]\n";
    }
    for (std::size_t g = 0; g < a.size(); ++g) {
        Word w{Letter(g)};
        Tensor d0 = spec.ext.delta.at(0, 0)(w), d1 = spec.ext.delta.at(1, 0)(w);
        if (d0.is_zero() && d1.is_zero()) continue;
        o << "nu " << a.names[g] << " = [" << tensor_expr(d0, a) << ", " << tensor_expr(d1, a) << "]\n";
    }
    if (spec.degree >= 0) o << "degree " << spec.degree << "\n";
    if (spec.randomized > 0) o << "randomized " << spec.randomized << "\n";
    return o.str();
}

}  // namespace dox
