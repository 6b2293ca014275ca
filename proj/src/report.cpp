#include "dox/report.hpp"

#include <sstream>

#include "dox/error.hpp"

namespace dox {

Json to_json(const Scalar& s) { return Json{{"re", s.re_str()}, {"im", s.im_str()}}; }

Scalar scalar_from_json(const Json& j) {
    return Scalar::from_parts(j.at("re").get<std::string>(), j.at("im").get<std::string>());
}

Json to_json(const Tensor& t, const Alphabet& alpha) {
    Json out = Json::array();
    for (const auto& [w, c] : t.terms()) {
        Json word = Json::array();
        for (Letter l : w) word.push_back(alpha.names.at(l));
        out.push_back(Json{{"word", word}, {"re", c.re_str()}, {"im", c.im_str()}});
    }
    return out;
}

Tensor tensor_from_json(const Json& j, const Alphabet& alpha, int degree) {
    Tensor t(degree);
    for (const Json& term : j) {
        Word w;
        for (const Json& name : term.at("word")) {
            auto it = std::find(alpha.names.begin(), alpha.names.end(), name.get<std::string>());
            if (it == alpha.names.end()) throw parse_error("ParseError", "unknown generator " + name.dump());
            w.push_back(Letter(it - alpha.names.begin()));
        }
        if (int(w.size()) != degree) throw parse_error("ParseError", "tensor term of the wrong degree");
        t.add_term(w, scalar_from_json(term));
    }
    return t;
}

Json to_json(const ScalarMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const Scalar& s : row) r.push_back(to_json(s));
        out.push_back(r);
    }
    return out;
}

Json to_json(const TensorMatrix& m, const Alphabet& alpha) {
    Json out = Json::array();
    for (int i = 0; i < m.rows; ++i) {
        Json r = Json::array();
        for (int j = 0; j < m.cols; ++j) r.push_back(to_json(m.at(i, j), alpha));
        out.push_back(r);
    }
    return out;
}

Json to_json(const std::vector<Check>& checks) {
    Json out = Json::array();
    for (const Check& c : checks) out.push_back(Json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    return out;
}

namespace {

bool is_scalar(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("re") && j.contains("im"); }

bool is_term(const Json& j) { return j.is_object() && j.contains("word") && j.contains("re"); }

bool is_tensor(const Json& j) { return j.is_array() && (j.empty() || is_term(j.front())); }

bool is_check(const Json& j) { return j.is_object() && j.contains("name") && j.contains("ok"); }

Scalar scalar_of(const Json& j) { return scalar_from_json(j); }

// Shared by both renderers: a tensor as a signed sum of coefficient·word.
std::string tensor_string(const Json& t, const std::string& sep, bool latex) {
    if (t.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Json& term : t) {
        Scalar c = scalar_of(term);
        std::string word;
        for (std::size_t k = 0; k < term["word"].size(); ++k) {
            std::string name = term["word"][k].get<std::string>();
            if (latex) {
                std::size_t p = name.find_first_of("0123456789");
                if (p != std::string::npos && p > 0) name = name.substr(0, p) + "_{" + name.substr(p) + "}";
            }
            word += (k ? sep : "") + name;
        }
        bool neg = c.is_real() ? sgn(c.re) < 0 : (sgn(c.re) == 0 && sgn(c.im) < 0);
        Scalar a = neg ? -c : c;
        std::string coef;
        if (!a.is_one()) {
            coef = a.str();
            if (!a.is_real() && sgn(a.re) != 0) coef = "(" + coef + ")";
            if (latex) {
                std::string tmp;
                for (char ch : coef) {
                    if (ch == '*') continue;
                    tmp += ch;
                }
                coef = tmp;
            }
            coef += latex ? "\\," : " ";
        }
        if (word.empty()) word = "1", coef = a.is_one() ? "" : a.str();
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += coef + word;
        first = false;
    }
    return out;
}

std::string scalar_text(const Json& j) { return scalar_of(j).str(); }

std::string inline_text(const Json& j) {
    if (is_scalar(j)) return scalar_text(j);
    if (is_tensor(j) && !j.empty()) return tensor_string(j, "*", false);
    if (j.is_array()) {
        std::string out = "[";
        for (std::size_t k = 0; k < j.size(); ++k) {
            const Json& e = j[k];
            out += (k ? ", " : "");
            out += (is_tensor(e) && !e.is_null()) ? (e.empty() ? "0" : tensor_string(e, "*", false)) : inline_text(e);
        }
        return out + "]";
    }
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

bool is_flat(const Json& j) {
    if (!j.is_array()) return true;
    if (is_tensor(j)) return true;
    for (const Json& e : j)
        if (e.is_object() && !is_scalar(e)) return false;
    return j.size() <= 4 || std::all_of(j.begin(), j.end(), [](const Json& e) { return !e.is_array(); });
}

void text_node(std::ostringstream& os, const std::string& key, const Json& j, int indent) {
    std::string pad(std::size_t(indent) * 2, ' ');
    if (is_check(j)) {
        os << pad << (j["ok"].get<bool>() ? "[ok]   " : "[FAIL] ") << j["name"].get<std::string>();
        std::string d = j.value("detail", "");
        if (!d.empty()) os << ": " << d;
        os << "\n";
        return;
    }
    if (j.is_object() && !is_scalar(j)) {
        if (!key.empty()) os << pad << key << ":\n";
        for (auto it = j.begin(); it != j.end(); ++it) text_node(os, it.key(), it.value(), indent + (key.empty() ? 0 : 1));
        return;
    }
    if (j.is_array() && !is_flat(j)) {
        os << pad << key << ":\n";
        for (const Json& e : j) text_node(os, "-", e, indent + 1);
        return;
    }
    os << pad << key << (key.empty() ? "" : ": ") << inline_text(j) << "\n";
}

std::string latex_scalar(const Json& j) {
    std::string s = scalar_of(j).str(), out;
    for (char c : s)
        if (c != '*') out += c;
    return out;
}

std::string latex_inline(const Json& j);

std::string latex_matrix(const Json& j) {
    std::string out = "\\begin{pmatrix}";
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (r) out += " \\\\ ";
        for (std::size_t c = 0; c < j[r].size(); ++c) out += (c ? " & " : "") + latex_inline(j[r][c]);
    }
    return out + "\\end{pmatrix}";
}

std::string latex_inline(const Json& j) {
    if (is_scalar(j)) return latex_scalar(j);
    if (is_tensor(j)) return tensor_string(j, " \\otimes ", true);
    if (j.is_array()) {
        bool matrix = !j.empty() && std::all_of(j.begin(), j.end(), [](const Json& r) {
            return r.is_array() && !is_tensor(r);
        });
        if (matrix) return latex_matrix(j);
        std::string out = "\\begin{pmatrix}";
        for (std::size_t k = 0; k < j.size(); ++k) out += (k ? " \\\\ " : "") + latex_inline(j[k]);
        return out + "\\end{pmatrix}";
    }
    if (j.is_string()) return "\\text{" + j.get<std::string>() + "}";
    return j.dump();
}

std::string latex_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '_' || c == '&' || c == '%' || c == '#') out += '\\';
        out += c;
    }
    return out;
}

void latex_node(std::ostringstream& os, const std::string& key, const Json& j) {
    if (is_check(j)) {
        os << "\\item[" << (j["ok"].get<bool>() ? "ok" : "FAIL") << "] \\texttt{" << latex_escape(j["name"].get<std::string>())
           << "}";
        std::string d = j.value("detail", "");
        if (!d.empty()) os << ": " << latex_escape(d);
        os << "\n";
        return;
    }
    if (j.is_object() && !is_scalar(j)) {
        if (!key.empty()) os << "\\paragraph{" << latex_escape(key) << "}\n";
        for (auto it = j.begin(); it != j.end(); ++it) latex_node(os, it.key(), it.value());
        return;
    }
    if (j.is_array() && !j.empty() && is_check(j.front())) {
        os << "\\paragraph{" << latex_escape(key) << "}\n\\begin{itemize}\n";
        for (const Json& c : j) latex_node(os, "", c);
        os << "\\end{itemize}\n";
        return;
    }
    if (j.is_array() && !j.empty() && j.front().is_object() && !is_scalar(j.front()) && !is_term(j.front())) {
        os << "\\paragraph{" << latex_escape(key) << "}\n";
        for (const Json& e : j) latex_node(os, "", e);
        return;
    }
    if (j.is_string() || j.is_number() || j.is_boolean()) {
        os << "\\noindent\\texttt{" << latex_escape(key) << "}: " << latex_escape(j.is_string() ? j.get<std::string>() : j.dump())
           << "\\\\\n";
        return;
    }
    os << "\\[ \\mathtt{" << latex_escape(key) << "} = " << latex_inline(j) << " \\]\n";
}

}  // namespace

std::string render_text(const Json& doc) {
    std::ostringstream os;
    text_node(os, "", doc, 0);
    return os.str();
}

std::string render_latex(const Json& doc) {
    std::ostringstream os;
    latex_node(os, "", doc);
    return os.str();
}

}  // namespace dox
