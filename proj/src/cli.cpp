#include "exring/cli.hpp"

#include "exring/enumeration.hpp"
#include "exring/fock.hpp"
#include "exring/ideal.hpp"
#include "exring/json_io.hpp"
#include "exring/poly_io.hpp"
#include "exring/stdmono.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

namespace exring::cli {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string read_all(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw UsageError("cannot read " + path);
        buf << f.rdbuf();
    }
    return buf.str();
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// JSON document, or a bare word over {u, d}.
json parse_input(const std::string& text) {
    std::string t = trim(text);
    if (!t.empty() && t.find_first_not_of("ud") == std::string::npos) return t;
    try {
        return json::parse(t);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("input is not valid JSON: ") + e.what());
    }
}

std::string compact(const json& j) { return j.dump(); }

void print_matrix_rows(std::ostream& out, const std::vector<std::vector<int>>& rows) {
    for (const auto& r : rows) {
        for (std::size_t j = 0; j < r.size(); ++j) out << (j ? " " : "") << r[j];
        out << '\n';
    }
}

std::vector<std::vector<int>> int_rows(const ExponentMatrix& m) {
    std::vector<std::vector<int>> rows;
    for (const auto& r : m.to_rows()) rows.emplace_back(r.begin(), r.end());
    return rows;
}

void print_progress(std::ostream& err, const std::string& what, std::size_t done, std::size_t total, int& last) {
    if (total < 10000) return;
    int pct = static_cast<int>(done * 100 / total);
    if (pct / 10 == last / 10) return;
    last = pct;
    err << what << ": " << pct << "% (" << done << "/" << total << ")\n";
}

struct Check {
    std::string name;
    std::string status;  // PASS, FAIL or SKIP
    std::string detail;
};

json checks_to_json(const std::vector<Check>& checks) {
    json arr = json::array();
    for (const auto& c : checks) arr.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    return arr;
}

bool all_pass(const std::vector<Check>& checks) {
    for (const auto& c : checks)
        if (c.status == "FAIL") return false;
    return true;
}

void print_table(std::ostream& out, const std::vector<Check>& checks) {
    std::size_t w = 5;
    for (const auto& c : checks) w = std::max(w, c.name.size());
    auto pad = [&](const std::string& s) { return s + std::string(w + 2 - s.size(), ' '); };
    out << pad("check") << "status  detail\n";
    for (const auto& c : checks) out << pad(c.name) << c.status << std::string(8 - c.status.size(), ' ') << c.detail << '\n';
}

Check groebner_check(int m, int k, std::ostream& err, bool quiet) {
    int last = -10;
    ProgressFn progress;
    if (!quiet)
        progress = [&](std::size_t done, std::size_t total) { print_progress(err, "groebner", done, total, last); };
    BuchbergerReport r = buchberger_verify(m, k, progress);
    std::string detail = std::to_string(r.checked) + " S-pairs reduced to 0, " + std::to_string(r.coprime_skipped) +
                         " coprime pairs skipped";
    if (!r.all_reduced) detail = std::to_string(r.failures.size()) + " of " + std::to_string(r.checked) +
                                 " S-pairs have a nonzero remainder";
    return {"groebner", r.all_reduced ? "PASS" : "FAIL", detail};
}

Check dimension_check(int m, int k) {
    std::size_t count = enumerate_standard(m, k).size();
    BigInt expected = narayana(m + 1, k + 1);
    bool ok = BigInt(std::to_string(count)) == expected;
    return {"dimension", ok ? "PASS" : "FAIL",
            std::to_string(count) + " standard monomials, N(" + std::to_string(m + 1) + "," + std::to_string(k + 1) +
                ") = " + expected.get_str()};
}

Check bijection_check(int m, int k) {
    auto mats = enumerate_standard(m, k);
    std::size_t bad = 0;
    std::set<std::string> words;
    for (const auto& M : mats) {
        TableauPair t = rsk(M);
        if (!(rsk_inverse(t.insertion, t.recording) == M)) ++bad;
        PlanePartition B = matrix_to_pp(M);
        if (!(pp_to_matrix(B) == M)) ++bad;
        PPTableaux back = pp_to_tableaux(B);
        if (!(back.p == t.recording && back.q == t.insertion)) ++bad;
        DyckWord w = pp_to_dyck(B, m, k);
        if (dyck_to_pp(w, m, k).entries() != B.entries()) ++bad;
        words.insert(w.str());
    }
    std::set<std::string> expected;
    for (const auto& w : dyck_set(m + 1, k + 1)) expected.insert(w.str());
    bool ok = bad == 0 && words.size() == mats.size() && words == expected;
    std::string detail = std::to_string(mats.size()) + " matrices -> " + std::to_string(words.size()) +
                         " distinct Dyck words of " + std::to_string(expected.size()) + "; " +
                         std::to_string(bad) + " round-trip failures";
    return {"bijections", ok ? "PASS" : "FAIL", detail};
}

std::vector<Check> fock_checks(int m, int k) {
    std::vector<Check> out;
    CubicRelationReport cubic = verify_cubic_relations(m, k);
    out.push_back({"cubic-relations", cubic.ok() ? "PASS" : "FAIL",
                   std::to_string(cubic.relations - cubic.failures.size()) + "/" + std::to_string(cubic.relations) +
                       " generators vanish at X"});
    IdentityReport comm = verify_excitation_commutators(m, k);
    out.push_back({"commutators", comm.ok() ? "PASS" : "FAIL",
                   std::to_string(comm.checked - comm.failures.size()) + "/" + std::to_string(comm.checked) +
                       " commutators vanish"});
    IdentityReport sl2 = verify_sl2_relations(m, 2 * k);
    out.push_back({"sl2-relations", sl2.ok() ? "PASS" : "FAIL",
                   std::to_string(sl2.checked - sl2.failures.size()) + "/" + std::to_string(sl2.checked) +
                       " bracket relations hold"});
    ExcitationBasisReport basis = analyze_excitation_basis(m, k);
    out.push_back({"excitation-basis", basis.is_basis() ? "PASS" : "FAIL",
                   "rank " + std::to_string(basis.rank) + " of " + std::to_string(basis.vectors.size()) +
                       " vectors, invariant dimension " + std::to_string(basis.invariant_dimension) +
                       (basis.all_invariant ? "" : ", some vectors not invariant")});
    return out;
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err, std::istream& in) : out_(out), err_(err), in_(in) {}

    int run(const std::vector<std::string>& args) {
        CLI::App app{"Exact computations in the excitation ring S_{m,k} and its combinatorial models", "exring"};
        app.require_subcommand(1, 1);
        app.set_help_all_flag("--help-all", "Show help for all subcommands");

        std::function<int()> action;
        define(app, action);

        std::vector<std::string> argv_store{"exring"};
        argv_store.insert(argv_store.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : argv_store) argv.push_back(a.c_str());
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::ParseError& e) {
            int code = app.exit(e, out_, err_);
            return code == 0 ? kOk : kUsage;
        }
        try {
            return action();
        } catch (const BudgetExceeded& e) {
            err_ << "exring: budget exceeded: " << e.what() << '\n';
        } catch (const json::exception& e) {
            err_ << "exring: error: malformed input: " << e.what() << '\n';
        } catch (const std::invalid_argument& e) {
            err_ << "exring: error: " << e.what() << '\n';
        } catch (const std::out_of_range& e) {
            err_ << "exring: error: " << e.what() << '\n';
        }
        return kUsage;
    }

private:
    bool json_out() const { return format_ == "json"; }

    void add_format(CLI::App* s) {
        s->add_option("--format", format_, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    }

    void add_mk(CLI::App* s, int k_min) {
        s->add_option("--m", m_, "Number of spatial orbitals")->required()->check(CLI::Range(1, kMaxOrbitals));
        s->add_option("--k", k_, "Number of occupied orbitals")->required()->check(CLI::Range(k_min, kMaxOrbitals));
    }

    void check_k() const {
        if (k_ > m_) throw std::invalid_argument("require k <= m (got m=" + std::to_string(m_) + ", k=" + std::to_string(k_) + ")");
    }

    json input() { return parse_input(read_all(in_path_, in_)); }

    void define(CLI::App& app, std::function<int()>& action) {
        auto* gens = app.add_subcommand("gens", "Print the cubic generators of I_{m,k}");
        add_mk(gens, 1);
        add_format(gens);
        gens->callback([&] { action = [this] { return cmd_gens(); }; });

        auto* groebner = app.add_subcommand("groebner", "Check that the generators of I_{m,k} form a Groebner basis");
        add_mk(groebner, 1);
        add_format(groebner);
        groebner->add_flag("--quiet", quiet_, "No progress on stderr");
        groebner->callback([&] { action = [this] { return cmd_groebner(); }; });

        auto* stdmono = app.add_subcommand("stdmono", "Standard monomials of S_{m,k}, by degree then lex");
        add_mk(stdmono, 1);
        add_format(stdmono);
        auto* cnt = stdmono->add_flag("--count", count_, "Print the number of standard monomials");
        stdmono->add_flag("--list", list_, "List the exponent matrices (default)")->excludes(cnt);
        stdmono->callback([&] { action = [this] { return cmd_stdmono(); }; });

        auto* dim = app.add_subcommand("dim", "Vector-space dimension of S_{m,k}");
        add_mk(dim, 1);
        add_format(dim);
        dim->callback([&] { action = [this] { return cmd_dim(); }; });

        auto* rsk_cmd = app.add_subcommand("rsk", "Matrix <-> pair of semistandard tableaux");
        rsk_cmd->add_option("--in", in_path_, "Input file (default stdin)");
        rsk_cmd->add_flag("--inverse", inverse_, "Read {\"insertion\",\"recording\"} and print the matrix");
        rsk_cmd->add_option("--rows", rows_, "Rows of the matrix for --inverse (default: largest recording entry)");
        rsk_cmd->add_option("--cols", cols_, "Columns of the matrix for --inverse (default: largest insertion entry)");
        add_format(rsk_cmd);
        rsk_cmd->callback([&] { action = [this] { return cmd_rsk(); }; });

        auto* pp = app.add_subcommand("pp", "Convert to or from plane partitions");
        pp->add_option("--in", in_path_, "Input file (default stdin)");
        auto* from = pp->add_option("--from", from_, "Build a plane partition from this representation")
                         ->check(CLI::IsMember({"matrix", "tableaux", "dyck"}));
        auto* to = pp->add_option("--to", to_, "Convert a plane partition to this representation")
                       ->check(CLI::IsMember({"matrix", "tableaux", "dyck"}));
        auto* tr = pp->add_flag("--transpose", transpose_, "Transpose a plane partition");
        from->excludes(to)->excludes(tr);
        to->excludes(tr);
        pp->add_option("--rows", rows_, "Rows a of the plane partition (for --from tableaux)");
        pp->add_option("--cols", cols_, "Columns b of the plane partition (for --from tableaux)");
        pp->add_option("--m", m_, "Ambient m (for --from dyck; default from the word length)");
        add_format(pp);
        pp->callback([&] { action = [this] { return cmd_pp(); }; });

        auto* dyck = app.add_subcommand("dyck", "Dyck word statistics and the plane-partition bijection");
        dyck->add_option("--in", in_path_, "Input file (default stdin)");
        auto* topp = dyck->add_flag("--to-pp", to_pp_, "Map a word of D(m+1,k+1) to B(k,m-k,2)");
        dyck->add_flag("--from-pp", from_pp_, "Map a plane partition with entries <= 2 to its Dyck word")->excludes(topp);
        add_format(dyck);
        dyck->callback([&] { action = [this] { return cmd_dyck(); }; });

        auto* count = app.add_subcommand("count", "Closed-form counts");
        count->require_subcommand(1, 1);
        auto* nar = count->add_subcommand("narayana", "N(n,r) = C(n,r) C(n,r-1) / n");
        nar->add_option("--n", n_)->required();
        nar->add_option("--r", r_)->required();
        add_format(nar);
        nar->callback([&] { action = [this] { return cmd_count("narayana", {n_, r_}, narayana(n_, r_)); }; });
        auto* cat = count->add_subcommand("catalan", "C(2n,n) / (n+1)");
        cat->add_option("--n", n_)->required();
        add_format(cat);
        cat->callback([&] { action = [this] { return cmd_count("catalan", {n_}, catalan(n_)); }; });
        auto* mac = count->add_subcommand("macmahon", "Plane partitions in an a x b x c box");
        mac->add_option("--a", a_)->required()->check(CLI::NonNegativeNumber);
        mac->add_option("--b", b_)->required()->check(CLI::NonNegativeNumber);
        mac->add_option("--c", c_)->required()->check(CLI::NonNegativeNumber);
        add_format(mac);
        mac->callback([&] { action = [this] { return cmd_count("macmahon", {a_, b_, c_}, macmahon_count(a_, b_, c_)); }; });

        auto* en = app.add_subcommand("enum", "Enumerate plane partitions or Dyck words");
        en->require_subcommand(1, 1);
        auto* epp = en->add_subcommand("pp", "All a x b plane partitions with entries <= c");
        epp->add_option("--a", a_)->required()->check(CLI::NonNegativeNumber);
        epp->add_option("--b", b_)->required()->check(CLI::NonNegativeNumber);
        epp->add_option("--c", c_)->required()->check(CLI::NonNegativeNumber);
        auto* epp_count = epp->add_flag("--count", count_, "Print only the number of objects");
        epp->add_flag("--list", list_, "List the objects (default)")->excludes(epp_count);
        add_format(epp);
        epp->callback([&] { action = [this] { return cmd_enum_pp(); }; });
        auto* edyck = en->add_subcommand("dyck", "All Dyck words of semilength n with a given valley count");
        edyck->add_option("--n", n_)->required()->check(CLI::NonNegativeNumber);
        auto* val = edyck->add_option("--valleys", valleys_, "Number of valleys")->check(CLI::NonNegativeNumber);
        auto* rr = edyck->add_option("--r", r_, "D(n,r): r - 1 valleys")->check(CLI::PositiveNumber);
        val->excludes(rr);
        auto* ed_count = edyck->add_flag("--count", count_, "Print only the number of objects");
        edyck->add_flag("--list", list_, "List the objects (default)")->excludes(ed_count);
        add_format(edyck);
        edyck->callback([&, val, rr] {
            if (val->count() == 0 && rr->count() == 0) throw CLI::RequiredError("--valleys or --r");
            if (rr->count()) valleys_ = r_ - 1;
            action = [this] { return cmd_enum_dyck(); };
        });

        auto* fock = app.add_subcommand("fock", "Spin-adapted states in the fermionic Fock space");
        fock->require_subcommand(1, 1);
        auto* inv = fock->add_subcommand("invariant-dim", "Dimension of the sl2-invariant subspace of H_{m,d}");
        inv->add_option("--m", m_)->required()->check(CLI::Range(1, kMaxOrbitals));
        inv->add_option("--d", d_)->required()->check(CLI::NonNegativeNumber);
        add_format(inv);
        inv->callback([&] { action = [this] { return cmd_fock_dim(); }; });
        auto* fv = fock->add_subcommand("verify", "Cubic relations, commutators and the excitation basis");
        add_mk(fv, 1);
        add_format(fv);
        fv->callback([&] { action = [this] { return cmd_fock_verify(); }; });
        auto* fb = fock->add_subcommand("basis", "States m(X) applied to the reference state, m standard");
        add_mk(fb, 1);
        add_format(fb);
        fb->callback([&] { action = [this] { return cmd_fock_basis(); }; });

        auto* all = app.add_subcommand("verify-all", "Groebner basis, dimension, bijections and Fock checks");
        add_mk(all, 1);
        add_format(all);
        all->add_flag("--quiet", quiet_, "No progress on stderr");
        all->callback([&] { action = [this] { return cmd_verify_all(); }; });
    }

    int cmd_gens() {
        check_k();
        IdealPresentation p = generators(m_, k_);
        if (json_out()) {
            json arr = json::array();
            for (const auto& g : p.generators)
                arr.push_back({{"label", to_string(g.label)},
                               {"rows", g.label.rows},
                               {"cols", g.label.cols},
                               {"poly", polynomial_to_json(g.poly)}});
            out_ << arr.dump(2) << '\n';
        } else {
            for (const auto& g : p.generators) out_ << to_string(g.label) << " = " << format_polynomial(g.poly) << '\n';
        }
        return kOk;
    }

    int cmd_groebner() {
        check_k();
        int last = -10;
        ProgressFn progress;
        if (!quiet_)
            progress = [&](std::size_t done, std::size_t total) { print_progress(err_, "groebner", done, total, last); };
        BuchbergerReport r = buchberger_verify(m_, k_, progress);
        if (json_out()) {
            json failures = json::array();
            for (const auto& f : r.failures) failures.push_back({to_string(f.first), to_string(f.second)});
            out_ << json{{"m", r.m},
                         {"k", r.k},
                         {"generators", r.generator_count},
                         {"pairs", r.pairs_total},
                         {"coprime_skipped", r.coprime_skipped},
                         {"checked", r.checked},
                         {"all_reduced", r.all_reduced},
                         {"failures", failures}}
                        .dump(2)
                 << '\n';
        } else {
            out_ << "m = " << r.m << ", k = " << r.k << '\n'
                 << "generators: " << r.generator_count << '\n'
                 << "pairs: " << r.pairs_total << '\n'
                 << "coprime_skipped: " << r.coprime_skipped << '\n'
                 << "checked: " << r.checked << '\n'
                 << "all_reduced: " << (r.all_reduced ? "true" : "false") << '\n';
            for (const auto& f : r.failures)
                out_ << "failure: S(" << to_string(f.first) << ", " << to_string(f.second)
                     << ") -> " << format_polynomial(f.remainder) << '\n';
        }
        return r.all_reduced ? kOk : kCheckFailed;
    }

    int cmd_stdmono() {
        check_k();
        auto mats = enumerate_standard(m_, k_);
        if (count_) {
            if (json_out())
                out_ << json{{"m", m_}, {"k", k_}, {"count", mats.size()}}.dump() << '\n';
            else
                out_ << mats.size() << '\n';
            return kOk;
        }
        if (json_out()) {
            json arr = json::array();
            for (const auto& M : mats) arr.push_back(matrix_to_json(M));
            out_ << arr.dump() << '\n';
        } else {
            for (const auto& M : mats) out_ << M.degree() << '\t' << compact(matrix_to_json(M)) << '\n';
        }
        return kOk;
    }

    int cmd_dim() {
        check_k();
        std::size_t n = enumerate_standard(m_, k_).size();
        if (json_out())
            out_ << json{{"m", m_}, {"k", k_}, {"dim", n}}.dump() << '\n';
        else
            out_ << n << '\n';
        return kOk;
    }

    void print_pair(const SSYT& p, const SSYT& q, const char* pn, const char* qn) {
        if (json_out()) {
            out_ << json{{pn, ssyt_to_json(p)}, {qn, ssyt_to_json(q)}}.dump() << '\n';
        } else {
            out_ << pn << ":\n";
            print_matrix_rows(out_, p.rows());
            out_ << qn << ":\n";
            print_matrix_rows(out_, q.rows());
        }
    }

    void print_matrix(const ExponentMatrix& M) {
        if (json_out())
            out_ << compact(matrix_to_json(M)) << '\n';
        else
            print_matrix_rows(out_, int_rows(M));
    }

    void print_pp(const PlanePartition& B) {
        if (json_out()) {
            out_ << pp_to_json(B).dump() << '\n';
        } else {
            print_matrix_rows(out_, B.to_rows());
        }
    }

    static int max_entry(const json& rows) {
        int mx = 0;
        for (const auto& r : rows)
            for (const auto& v : r) mx = std::max(mx, v.get<int>());
        return mx;
    }

    int cmd_rsk() {
        json j = input();
        if (!inverse_) {
            TableauPair t = rsk(matrix_from_json(j));
            print_pair(t.insertion, t.recording, "insertion", "recording");
            return kOk;
        }
        const json& p = j.at("insertion");
        const json& q = j.at("recording");
        int rows = rows_ >= 0 ? rows_ : max_entry(q);
        int cols = cols_ >= 0 ? cols_ : max_entry(p);
        print_matrix(rsk_inverse(ssyt_from_json(p, cols), ssyt_from_json(q, rows)));
        return kOk;
    }

    int cmd_pp() {
        json j = input();
        if (from_ == "matrix") {
            print_pp(matrix_to_pp(matrix_from_json(j)));
        } else if (from_ == "tableaux") {
            const json& p = j.at("p");
            const json& q = j.at("q");
            int a = rows_ >= 0 ? rows_ : max_entry(p);
            int b = cols_ >= 0 ? cols_ : max_entry(q);
            print_pp(tableaux_to_pp(ssyt_from_json(p, a), ssyt_from_json(q, b), a, b));
        } else if (from_ == "dyck") {
            DyckWord w = dyck_from_json(j);
            int m = m_ >= 1 ? m_ : w.semilength() - 1;
            print_pp(dyck_to_pp(w, m, w.valley_count()));
        } else if (to_ == "matrix") {
            print_matrix(pp_to_matrix(pp_from_json(j)));
        } else if (to_ == "tableaux") {
            PPTableaux t = pp_to_tableaux(pp_from_json(j));
            print_pair(t.p, t.q, "p", "q");
        } else if (to_ == "dyck") {
            PlanePartition B = pp_from_json(j);
            print_word(pp_to_dyck(B, B.rows() + B.cols(), B.rows()));
        } else if (transpose_) {
            print_pp(transpose(pp_from_json(j)));
        } else {
            throw UsageError("pp needs one of --from, --to or --transpose");
        }
        return kOk;
    }

    void print_word(const DyckWord& w) {
        if (json_out())
            out_ << dyck_to_json(w).dump() << '\n';
        else
            out_ << w.str() << '\n';
    }

    int cmd_dyck() {
        json j = input();
        if (from_pp_) {
            PlanePartition B = pp_from_json(j);
            print_word(pp_to_dyck(B, B.rows() + B.cols(), B.rows()));
            return kOk;
        }
        DyckWord w = dyck_from_json(j);
        if (to_pp_) {
            print_pp(dyck_to_pp(w, w.semilength() - 1, w.valley_count()));
            return kOk;
        }
        DyckStats s = dyck_stats(w);
        if (json_out()) {
            json o = dyck_stats_to_json(s);
            o["word"] = w.str();
            o["semilength"] = w.semilength();
            out_ << o.dump() << '\n';
        } else {
            auto list = [](const std::vector<int>& v) {
                std::string s;
                for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
                return s;
            };
            out_ << "word: " << w.str() << '\n'
                 << "semilength: " << w.semilength() << '\n'
                 << "valleys: " << list(s.valleys) << '\n'
                 << "central: " << list(s.central) << '\n'
                 << "up: " << list(s.up) << '\n'
                 << "down: " << list(s.down) << '\n';
        }
        return kOk;
    }

    int cmd_count(const std::string& name, const std::vector<long>& args, const BigInt& value) {
        if (json_out())
            out_ << json{{"function", name}, {"args", args}, {"value", value.get_str()}}.dump() << '\n';
        else
            out_ << value.get_str() << '\n';
        return kOk;
    }

    template <class T, class Fn>
    int print_enum(const std::vector<T>& items, Fn to_json_item, const std::function<void(const T&)>& text_item) {
        if (count_) {
            if (json_out())
                out_ << json{{"count", items.size()}}.dump() << '\n';
            else
                out_ << items.size() << '\n';
            return kOk;
        }
        if (json_out()) {
            json arr = json::array();
            for (const auto& x : items) arr.push_back(to_json_item(x));
            out_ << arr.dump() << '\n';
        } else {
            for (const auto& x : items) text_item(x);
        }
        return kOk;
    }

    int cmd_enum_pp() {
        auto items = enumerate_pp(static_cast<int>(a_), static_cast<int>(b_), static_cast<int>(c_));
        return print_enum<PlanePartition>(items, pp_to_json, [this](const PlanePartition& B) {
            out_ << compact(json(B.to_rows())) << '\n';
        });
    }

    int cmd_enum_dyck() {
        auto items = enumerate_dyck(static_cast<int>(n_), static_cast<int>(valleys_));
        return print_enum<DyckWord>(items, dyck_to_json, [this](const DyckWord& w) { out_ << w.str() << '\n'; });
    }

    int cmd_fock_dim() {
        if (d_ > 2 * m_) throw std::invalid_argument("require d <= 2m");
        std::size_t dim = invariant_subspace(m_, d_).size();
        if (json_out())
            out_ << json{{"m", m_}, {"d", d_}, {"dim", dim}}.dump() << '\n';
        else
            out_ << dim << '\n';
        return kOk;
    }

    int report(const std::vector<Check>& checks) {
        bool ok = all_pass(checks);
        if (json_out())
            out_ << json{{"m", m_}, {"k", k_}, {"checks", checks_to_json(checks)}, {"ok", ok}}.dump(2) << '\n';
        else
            print_table(out_, checks);
        return ok ? kOk : kCheckFailed;
    }

    int cmd_fock_verify() {
        check_k();
        check_fock_budget(m_, 2 * k_);
        return report(fock_checks(m_, k_));
    }

    int cmd_fock_basis() {
        check_k();
        ExcitationBasisReport r = analyze_excitation_basis(m_, k_);
        if (json_out()) {
            json arr = json::array();
            for (std::size_t i = 0; i < r.vectors.size(); ++i)
                arr.push_back({{"monomial", matrix_to_json(r.monomials[i])}, {"state", state_to_json(r.vectors[i])}});
            out_ << arr.dump() << '\n';
        } else {
            for (std::size_t i = 0; i < r.vectors.size(); ++i) {
                out_ << compact(matrix_to_json(r.monomials[i])) << '\n';
                for (const auto& [mask, c] : r.vectors[i].amplitudes()) {
                    out_ << "  " << to_fraction_string(c) << "  ";
                    bool first = true;
                    for (const auto& o : SlaterBasisVector(mask).orbitals()) {
                        out_ << (first ? "" : "^") << o.position << (o.spin == Spin::up ? "u" : "d");
                        first = false;
                    }
                    out_ << '\n';
                }
            }
        }
        if (!r.is_basis()) {
            err_ << "exring: the excitation vectors are not a basis of the invariant subspace\n";
            return kCheckFailed;
        }
        return kOk;
    }

    int cmd_verify_all() {
        check_k();
        std::vector<Check> checks;
        checks.push_back(groebner_check(m_, k_, err_, quiet_));
        checks.push_back(dimension_check(m_, k_));
        checks.push_back(bijection_check(m_, k_));
        try {
            check_fock_budget(m_, 2 * k_);
            for (auto& c : fock_checks(m_, k_)) checks.push_back(std::move(c));
        } catch (const BudgetExceeded& e) {
            checks.push_back({"fock", "SKIP", e.what()});
        }
        return report(checks);
    }

    std::ostream& out_;
    std::ostream& err_;
    std::istream& in_;

    std::string format_ = "text";
    std::string in_path_;
    std::string from_, to_;
    int m_ = 0, k_ = 0, d_ = 0;
    int rows_ = -1, cols_ = -1;
    long n_ = 0, r_ = 0, valleys_ = 0, a_ = 0, b_ = 0, c_ = 0;
    bool count_ = false, list_ = false, quiet_ = false, inverse_ = false, transpose_ = false;
    bool to_pp_ = false, from_pp_ = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    return Runner(out, err, in).run(args);
}

}  // namespace exring::cli
