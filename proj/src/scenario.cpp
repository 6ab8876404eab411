#include "symchev/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace symchev {

const std::vector<std::string>& known_check_names() {
    static const std::vector<std::string> names = {"moment",    "invariants",  "restriction", "hilbert",
                                                   "dimension", "reducedness", "poisson",     "darboux"};
    return names;
}

bool Scenario::has_flag(const std::string& f) const {
    return std::find(flags.begin(), flags.end(), f) != flags.end();
}

bool Scenario::wants(const std::string& check) const {
    return std::find(checks.begin(), checks.end(), check) != checks.end();
}

namespace {

// Line-oriented tokenizer; bracket groups may span lines. '#' starts a
// comment. Strings are double-quoted.
struct Tok {
    enum Kind { Word, Number, String, LBracket, RBracket, LBrace, RBrace, Comma, End } kind;
    std::string text;
    int line;
};

class Lexer {
  public:
    Lexer(const std::string& text, std::string path) : s_(text), path_(std::move(path)) {}

    Tok next() {
        skip();
        Tok t;
        t.line = line_;
        if (pos_ >= s_.size()) {
            t.kind = Tok::End;
            return t;
        }
        char c = s_[pos_];
        if (c == '[') {
            ++pos_;
            t.kind = Tok::LBracket;
            return t;
        }
        if (c == ']') {
            ++pos_;
            t.kind = Tok::RBracket;
            return t;
        }
        if (c == '{') {
            ++pos_;
            t.kind = Tok::LBrace;
            return t;
        }
        if (c == '}') {
            ++pos_;
            t.kind = Tok::RBrace;
            return t;
        }
        if (c == ',') {
            ++pos_;
            t.kind = Tok::Comma;
            return t;
        }
        if (c == '"') {
            ++pos_;
            std::string v;
            while (pos_ < s_.size() && s_[pos_] != '"') {
                if (s_[pos_] == '\n') ++line_;
                v += s_[pos_++];
            }
            if (pos_ >= s_.size()) fail(t.line, "unterminated string");
            ++pos_;
            t.kind = Tok::String;
            t.text = std::move(v);
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
            std::string v;
            v += c;
            ++pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) v += s_[pos_++];
            t.kind = Tok::Number;
            t.text = std::move(v);
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string v;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '-')) {
                v += s_[pos_++];
            }
            t.kind = Tok::Word;
            t.text = std::move(v);
            return t;
        }
        fail(line_, std::string("unexpected character '") + c + "'");
    }

    [[noreturn]] void fail(int line, const std::string& msg) const { throw SchemaError(path_, line, msg); }

    int line() const { return line_; }

  private:
    const std::string& s_;
    std::string path_;
    std::size_t pos_ = 0;
    int line_ = 1;

    void skip() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }
};

class ScenarioParser {
  public:
    ScenarioParser(const std::string& text, std::string path) : lex_(text, path), path_(std::move(path)) {
        advance();
    }

    Scenario run() {
        Scenario sc;
        sc.path = path_;
        while (cur_.kind != Tok::End) {
            std::string key = expect_word("top-level key");
            handle_top(sc, key);
        }
        finalize(sc);
        return sc;
    }

  private:
    Lexer lex_;
    std::string path_;
    Tok cur_;

    void advance() { cur_ = lex_.next(); }
    [[noreturn]] void fail(const std::string& msg) { lex_.fail(cur_.line, msg); }

    std::string expect_word(const char* what) {
        if (cur_.kind != Tok::Word) fail(std::string("expected ") + what);
        std::string v = cur_.text;
        advance();
        return v;
    }
    std::string expect_string(const char* what) {
        if (cur_.kind != Tok::String) fail(std::string("expected quoted ") + what);
        std::string v = cur_.text;
        advance();
        return v;
    }
    Rat expect_rat(const char* what) {
        if (cur_.kind != Tok::Number) fail(std::string("expected number for ") + what);
        Rat v = rat_from_string(cur_.text);
        advance();
        return v;
    }
    long expect_int(const char* what) {
        Rat v = expect_rat(what);
        if (!is_integer(v)) fail(std::string("expected integer for ") + what);
        return v.get_num().get_si();
    }
    void expect(Tok::Kind k, const char* what) {
        if (cur_.kind != k) fail(std::string("expected ") + what);
        advance();
    }
    bool accept(Tok::Kind k) {
        if (cur_.kind == k) {
            advance();
            return true;
        }
        return false;
    }

    std::vector<Rat> rat_row() {
        expect(Tok::LBracket, "'['");
        std::vector<Rat> row;
        while (cur_.kind != Tok::RBracket) {
            row.push_back(expect_rat("matrix entry"));
            accept(Tok::Comma);
        }
        advance();  // ']'
        return row;
    }

    std::vector<std::vector<Rat>> rat_matrix() {
        expect(Tok::LBracket, "'[' opening a matrix");
        std::vector<std::vector<Rat>> rows;
        while (cur_.kind != Tok::RBracket) {
            rows.push_back(rat_row());
            accept(Tok::Comma);
        }
        advance();
        if (rows.empty()) fail("empty matrix literal");
        for (const auto& r : rows)
            if (r.size() != rows[0].size()) fail("ragged matrix literal");
        return rows;
    }

    std::vector<long> int_list() {
        expect(Tok::LBracket, "'[' opening a list");
        std::vector<long> xs;
        while (cur_.kind != Tok::RBracket) {
            Rat v = expect_rat("list entry");
            if (!is_integer(v)) fail("expected integer list entry");
            xs.push_back(v.get_num().get_si());
            accept(Tok::Comma);
        }
        advance();
        return xs;
    }

    QMatrix to_qmatrix(const std::vector<std::vector<Rat>>& rows) { return qmatrix_from_rows(rows); }

    void handle_top(Scenario& sc, const std::string& key) {
        if (key == "label") {
            sc.label = expect_word("label");
        } else if (key == "summary") {
            sc.summary = expect_string("summary");
        } else if (key == "disabled") {
            sc.disabled = true;
        } else if (key == "mode") {
            std::string m = expect_word("mode");
            if (m == "weyl-only")
                sc.weyl_only = true;
            else
                fail("unknown mode '" + m + "'");
        } else if (key == "flags") {
            while (cur_.kind == Tok::Word) sc.flags.push_back(expect_word("flag"));
        } else if (key == "vars") {
            while (cur_.kind == Tok::Word) sc.var_names.push_back(expect_word("variable name"));
        } else if (key == "group") {
            parse_group(sc);
        } else if (key == "cartan") {
            parse_cartan(sc);
        } else if (key == "invariants") {
            expect(Tok::LBrace, "'{'");
            while (!accept(Tok::RBrace)) {
                std::string k = expect_word("invariants key");
                if (k == "generator")
                    sc.invariant_texts.push_back(expect_string("polynomial"));
                else
                    fail("unknown invariants key '" + k + "'");
            }
        } else if (key == "checks") {
            while (cur_.kind == Tok::Word) {
                std::string c = expect_word("check name");
                const auto& names = known_check_names();
                if (std::find(names.begin(), names.end(), c) == names.end()) {
                    std::ostringstream os;
                    os << "unknown check '" << c << "'; valid names:";
                    for (const auto& n : names) os << " " << n;
                    fail(os.str());
                }
                sc.checks.push_back(c);
            }
        } else if (key == "degree-bound") {
            sc.degree_bound = static_cast<int>(expect_int("degree bound"));
        } else if (key == "weyl-degree-bound") {
            sc.weyl_degree_bound = static_cast<int>(expect_int("weyl degree bound"));
        } else if (key == "relation-degree-bound") {
            sc.relation_degree_bound = static_cast<int>(expect_int("relation degree bound"));
        } else if (key == "compare-truncation") {
            sc.compare_truncation = static_cast<int>(expect_int("compare truncation"));
        } else if (key == "radical-cap") {
            sc.radical_cap = static_cast<int>(expect_int("radical cap"));
        } else if (key == "budget-steps") {
            sc.budget.max_steps = static_cast<std::uint64_t>(expect_int("budget steps"));
        } else if (key == "budget-seconds") {
            sc.budget.max_seconds = static_cast<double>(expect_int("budget seconds"));
        } else if (key == "witness") {
            sc.witness_texts.push_back(expect_string("witness polynomial"));
        } else if (key == "auto-witnesses") {
            sc.auto_witnesses = true;
        } else if (key == "expected-dimension") {
            sc.expected_dimension = static_cast<int>(expect_int("expected dimension"));
        } else if (key == "darboux") {
            parse_darboux(sc);
        } else {
            fail("unknown key '" + key + "'");
        }
    }

    void parse_group(Scenario& sc) {
        std::string kind = expect_word("group kind (torus|lie|finite|theta)");
        expect(Tok::LBrace, "'{'");
        if (kind == "torus") {
            TorusSpec t;
            bool have = false;
            while (!accept(Tok::RBrace)) {
                std::string k = expect_word("torus key");
                if (k == "weights") {
                    auto rows = rat_matrix();
                    ZMatrix w(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
                    for (int i = 0; i < w.rows(); ++i)
                        for (int j = 0; j < w.cols(); ++j) {
                            if (!is_integer(rows[i][j])) fail("torus weights must be integers");
                            w.at(i, j) = rows[i][j].get_num();
                        }
                    t.weights = std::move(w);
                    have = true;
                } else {
                    fail("unknown torus key '" + k + "'");
                }
            }
            if (!have) fail("torus group needs a weights matrix");
            sc.group = GroupSpec(std::move(t));
        } else if (kind == "lie") {
            LieSpec l;
            while (!accept(Tok::RBrace)) {
                std::string k = expect_word("lie key");
                if (k == "generator") {
                    std::string name;
                    if (cur_.kind == Tok::Word) name = expect_word("generator name");
                    l.names.push_back(name);
                    l.gens.push_back(to_qmatrix(rat_matrix()));
                } else {
                    fail("unknown lie key '" + k + "'");
                }
            }
            if (l.gens.empty()) fail("lie group needs at least one generator");
            sc.group = GroupSpec(std::move(l));
        } else if (kind == "finite") {
            FiniteSpec f;
            while (!accept(Tok::RBrace)) {
                std::string k = expect_word("finite key");
                if (k == "generator")
                    f.gens.push_back(to_qmatrix(rat_matrix()));
                else if (k == "order-cap")
                    f.order_cap = static_cast<int>(expect_int("order cap"));
                else
                    fail("unknown finite key '" + k + "'");
            }
            if (f.gens.empty()) fail("finite group needs at least one generator");
            sc.group = GroupSpec(std::move(f));
        } else if (kind == "theta") {
            int n = -1, m = -1;
            std::vector<long> exps;
            while (!accept(Tok::RBrace)) {
                std::string k = expect_word("theta key");
                if (k == "n")
                    n = static_cast<int>(expect_int("n"));
                else if (k == "m")
                    m = static_cast<int>(expect_int("m"));
                else if (k == "exponents")
                    exps = int_list();
                else
                    fail("unknown theta key '" + k + "'");
            }
            if (n < 1 || m < 2 || exps.empty()) fail("theta group needs n, m and exponents");
            std::vector<int> e(exps.begin(), exps.end());
            ThetaRepresentation tr = theta_representation(n, m, e);
            sc.group = tr.rep.group;
            if (sc.var_names.empty()) sc.var_names = tr.rep.var_names;
        } else {
            fail("unknown group kind '" + kind + "'");
        }
    }

    void parse_cartan(Scenario& sc) {
        sc.has_cartan = true;
        expect(Tok::LBrace, "'{'");
        while (!accept(Tok::RBrace)) {
            std::string k = expect_word("cartan key");
            if (k == "c") {
                sc.c_basis = rat_matrix();
            } else if (k == "cdual") {
                if (cur_.kind == Tok::Word) {
                    std::string w = expect_word("cdual mode");
                    if (w != "derive-stable") fail("unknown cdual mode '" + w + "'");
                    sc.derive_cdual = true;
                } else {
                    sc.cdual_basis = rat_matrix();
                }
            } else if (k == "weyl") {
                while (cur_.kind == Tok::LBracket) sc.weyl.matrices.push_back(to_qmatrix(rat_matrix()));
                if (sc.weyl.matrices.empty()) fail("weyl needs at least one matrix");
            } else if (k == "weyl-cyclic") {
                CyclicDiagonalAction cy;
                while (cur_.kind == Tok::Word) {
                    std::string kk = expect_word("weyl-cyclic key");
                    if (kk == "order")
                        cy.order = static_cast<int>(expect_int("order"));
                    else if (kk == "weights") {
                        for (long v : int_list()) cy.weights.push_back(static_cast<int>(v));
                    } else
                        fail("unknown weyl-cyclic key '" + kk + "'");
                }
                if (cy.order < 2 || cy.weights.empty()) fail("weyl-cyclic needs order and weights");
                sc.weyl.cyclic = std::move(cy);
            } else {
                fail("unknown cartan key '" + k + "'");
            }
        }
    }

    void parse_darboux(Scenario& sc) {
        DarbouxSection d;
        expect(Tok::LBrace, "'{'");
        while (!accept(Tok::RBrace)) {
            std::string k = expect_word("darboux key");
            if (k == "n")
                d.n = static_cast<int>(expect_int("n"));
            else if (k == "cap")
                d.cap = static_cast<int>(expect_int("cap"));
            else if (k == "constant")
                d.constant = to_qmatrix(rat_matrix());
            else if (k == "term") {
                int a = static_cast<int>(expect_int("row index"));
                int b = static_cast<int>(expect_int("column index"));
                d.terms.emplace_back(a, b, expect_string("coefficient polynomial"));
            } else
                fail("unknown darboux key '" + k + "'");
        }
        if (d.n < 2) fail("darboux needs n >= 2");
        sc.darboux = std::move(d);
    }

    void finalize(Scenario& sc) {
        if (sc.label.empty()) fail_at_end("scenario needs a label");
        if (sc.weyl_degree_bound < 0) sc.weyl_degree_bound = sc.degree_bound;
        if (sc.relation_degree_bound < 0) sc.relation_degree_bound = 2 * sc.degree_bound;
        if (sc.compare_truncation < 0) sc.compare_truncation = 2 * sc.degree_bound;
        if (!sc.weyl_only && sc.group && !sc.var_names.empty()) {
            // dimension consistency
            int n = static_cast<int>(sc.var_names.size());
            if (const auto* t = std::get_if<TorusSpec>(&*sc.group)) {
                if (t->weights.cols() != n) fail_at_end("torus weight columns != number of variables");
            } else if (const auto* l = std::get_if<LieSpec>(&*sc.group)) {
                for (const auto& g : l->gens)
                    if (g.rows() != n || g.cols() != n) fail_at_end("lie generator size != number of variables");
            } else if (const auto* f = std::get_if<FiniteSpec>(&*sc.group)) {
                for (const auto& g : f->gens)
                    if (g.rows() != n || g.cols() != n) fail_at_end("finite generator size != number of variables");
            }
            if (sc.has_cartan && !sc.c_basis.empty()) {
                for (const auto& v : sc.c_basis)
                    if (static_cast<int>(v.size()) != n) fail_at_end("cartan c vector length != dim V");
                if (!sc.derive_cdual)
                    for (const auto& v : sc.cdual_basis)
                        if (static_cast<int>(v.size()) != n) fail_at_end("cartan cdual vector length != dim V");
                int k = static_cast<int>(sc.c_basis.size());
                for (const auto& w : sc.weyl.matrices)
                    if (w.rows() != 2 * k || w.cols() != 2 * k)
                        fail_at_end("weyl matrix must be 2k x 2k for k = dim c");
                if (sc.weyl.cyclic && static_cast<int>(sc.weyl.cyclic->weights.size()) != 2 * k)
                    fail_at_end("weyl-cyclic weights must have length 2k");
            }
        }
        if (sc.weyl_only) {
            if (!sc.group || !std::holds_alternative<FiniteSpec>(*sc.group))
                fail_at_end("weyl-only scenarios need a finite group");
            if (sc.var_names.empty()) fail_at_end("weyl-only scenarios need vars (the s,t coordinates)");
            if (sc.var_names.size() % 2) fail_at_end("weyl-only scenarios need an even variable count");
        }
        for (const auto& c : sc.checks) {
            if ((c == "restriction" || c == "hilbert") && !sc.weyl_only && !sc.has_cartan)
                fail_at_end("check '" + c + "' requires cartan data");
            if (c == "darboux" && !sc.darboux) fail_at_end("check 'darboux' requires a darboux section");
            if ((c == "moment" || c == "dimension" || c == "reducedness") && !sc.group && !sc.weyl_only)
                fail_at_end("check '" + c + "' requires a group");
        }
    }

    [[noreturn]] void fail_at_end(const std::string& msg) { throw SchemaError(path_, lex_.line(), msg); }
};

}  // namespace

Scenario parse_scenario_text(const std::string& text, const std::string& path_for_errors) {
    return ScenarioParser(text, path_for_errors).run();
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return parse_scenario_text(os.str(), path);
}

std::vector<Scenario> load_corpus(const std::string& dir) {
    std::vector<Scenario> out;
    if (!std::filesystem::is_directory(dir)) throw std::runtime_error("corpus directory '" + dir + "' not found");
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".scn") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) out.push_back(load_scenario(f.string()));
    std::sort(out.begin(), out.end(), [](const Scenario& a, const Scenario& b) { return a.label < b.label; });
    return out;
}

}  // namespace symchev
