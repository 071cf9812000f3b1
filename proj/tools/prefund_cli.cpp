// Batch driver: every check prints one "CHECK <name> PASS|FAIL ..." line.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "prefund/chars.hpp"
#include "prefund/microrec.hpp"

using namespace prefund;

namespace {

struct JobSpec {
    std::string family = "A";
    int n = 1;
    int r = 1;
    int height = 4;
    std::string bound;
    int K = 6;
    std::uint64_t seed = 20240611;
    int random = 100;
    std::string model = "pos";
    std::string format = "text";
    std::string output;
    bool verbose = false;
    bool serial = false;

    AffineType type() const {
        AffineType t{family == "D" ? Family::D : Family::A, n, r};
        if (family != "A" && family != "D") throw std::invalid_argument("--family must be A or D");
        validate(t);
        return t;
    }
    RootVec box() const {
        if (bound.empty()) return RootVec(n, height);
        RootVec b;
        std::stringstream in(bound);
        std::string tok;
        while (std::getline(in, tok, ',')) b.push_back(std::stoi(tok));
        if (static_cast<int>(b.size()) != n) throw std::invalid_argument("--bound needs n entries");
        return b;
    }
    Model sign() const {
        if (model != "pos" && model != "neg") throw std::invalid_argument("--model must be pos or neg");
        return model == "pos" ? Model::Plus : Model::Minus;
    }
};

class Report {
public:
    explicit Report(const JobSpec& spec) : spec_(spec) {}
    void check(const std::string& name, bool pass, const std::string& detail = "") {
        CheckReport r;
        r.name = name;
        r.pass = pass;
        r.detail = detail;
        add(r);
    }
    void add(const CheckReport& r) {
        failed_ |= !r.pass;
        out_ << r.line() << "\n";
    }
    void table(const std::string& text) {
        if (spec_.format == "text") out_ << text;
    }
    void verbose(const std::string& text) {
        if (spec_.verbose) out_ << text;
    }
    bool failed() const { return failed_; }
    std::string str() const { return out_.str(); }

private:
    const JobSpec& spec_;
    std::ostringstream out_;
    bool failed_ = false;
};

std::string tag(const AffineType& t) { return "[" + to_string(t) + "]"; }

void cmd_relations(const JobSpec& spec, Report& rep) {
    const auto t = spec.type();
    LatticeModule m(t);
    SweepOptions opt;
    opt.extra_random = static_cast<std::size_t>(spec.random);
    opt.seed = spec.seed;
    opt.mode = spec.serial ? SweepMode::Serial : SweepMode::Parallel;
    for (auto r : check_relations(relation_suite(m.rs()), m, spec.box(), opt)) {
        r.name = "relation_" + r.name + tag(t);
        rep.add(r);
    }
}

void cmd_lweight(const JobSpec& spec, Report& rep) {
    const auto t = spec.type();
    RootSystemData rs(t);
    std::ostringstream tab;
    if (spec.sign() == Model::Plus) {
        LatticeModule m(t);
        auto w = ell_weight_of_vacuum(m, spec.K);
        tab << w.report();
        for (int i = 1; i <= t.n; ++i) {
            const auto want = i == t.r ? ClosedForm::Polynomial : ClosedForm::Trivial;
            rep.check("lweight_pos_Psi" + std::to_string(i) + tag(t), w.form[i] == want,
                      "form " + to_string(w.form[i]));
        }
        tab << "Psi_r(z) = 1 - (" << to_string(w.gamma) << ") z\n";
    } else {
        auto w = negative_ell_weight(t, spec.K);
        for (std::size_t k = 0; k < w.psi.size(); ++k) {
            tab << "k=" << k << " psi=" << to_string(w.psi[k]);
            if (k) tab << " gamma=" << to_string(w.gamma[k]);
            tab << "\n";
        }
        tab << "Psi_r(z) = 1/(1 + (" << to_string(-w.expected_ratio) << ") z)  [conditional on the quoted base scalars]\n";
        rep.check("lweight_neg_geometric" + tag(t), w.form == ClosedForm::Geometric, "form " + to_string(w.form));
    }
    rep.table(tab.str());
}

void cmd_character(const JobSpec& spec, Report& rep) {
    const auto t = spec.type();
    LatticeModule m(t);
    std::vector<RootVec> roots;
    for (const auto& b : m.roots()) roots.push_back(b.alpha);
    const auto box = spec.box();
    const auto lhs = module_character(t, box);
    const auto rhs = product_character(roots, std::vector<int>(roots.size(), 1), box);
    rep.table(character_csv(lhs));
    std::string detail;
    if (lhs != rhs) {
        for (const auto& [w, d] : rhs)
            if (lhs.count(w) == 0 || lhs.at(w) != d) {
                detail = "first mismatch at weight " + std::to_string(w.size()) + "-vector, product " +
                         std::to_string(d);
                break;
            }
        if (detail.empty()) detail = "module has weights outside the product expansion";
    }
    rep.check("character_product" + tag(t), lhs == rhs, detail);
}

void cmd_braid(const JobSpec& spec, Report& rep) {
    const auto t = spec.type();
    RootSystemData rs(t);
    const auto rw = reading_words(t);
    std::ostringstream tab;
    tab << "row " << word_to_string(rw.row_word) << "\ncol " << word_to_string(rw.col_word) << "\n";
    rep.table(tab.str());
    rep.check("braid_reading_words" + tag(t), braid_equivalent(rs, rw.row_word, rw.col_word));
    const auto word = reduced_word_wr(t);
    rep.check("braid_row_is_wr" + tag(t), braid_equivalent(rs, rw.row_word, word));
    std::vector<RootVec> order;
    try {
        order = convex_order(rs, word);
    } catch (const NotReduced& e) {
        rep.check("braid_reduced" + tag(t), false, e.what());
        return;
    }
    rep.check("braid_beta_first" + tag(t), order.front() == rs.simple(t.r));
    rep.check("braid_beta_last" + tag(t), order.back() == rs.theta());
    auto listed = positive_roots_wr(t);
    std::vector<RootVec> want;
    for (const auto& b : listed) want.push_back(b.alpha);
    std::sort(want.begin(), want.end());
    std::sort(order.begin(), order.end());
    rep.check("braid_inversion_set" + tag(t), want == order);
}

void cmd_rank1(const JobSpec& spec, Report& rep) {
    const int M = spec.K < 1 ? 20 : spec.K;
    for (const auto& r : rank_one_serre_check(M)) rep.add(r);
    const Model model = spec.sign();
    auto gam = rank_one_gamma(model, M);
    auto psi = rank_one_psi(model, M);
    std::ostringstream tab;
    const AffineType a1{Family::A, 1, 1};
    bool ok = true;
    for (int k = 1; k <= M; ++k) {
        tab << "k=" << k << " gamma=" << to_string(gam[k]) << " psi=" << to_string(psi[k]) << "\n";
        if (model == Model::Minus) ok &= gam[k] == negative_gamma_closed_form(a1, k);
        else ok &= (k == 1) ? gam[k] == level_one_on_vacuum(a1) : gam[k].is_zero();
    }
    rep.table(tab.str());
    rep.check("rank1_gamma_" + to_string(model), ok);
}

void cmd_recurrence(const JobSpec& spec, Report& rep) {
    const auto t = spec.type();
    const Model model = spec.sign();
    std::ostringstream tab;
    auto gam = string_recurrence(t, model, spec.K);
    bool ok = true;
    tab << "k; gamma_k; residual\n";
    for (int k = 1; k <= spec.K; ++k) {
        Coefficient want = model == Model::Minus ? negative_gamma_closed_form(t, k)
                                                 : (k == 1 ? level_one_on_vacuum(t) : Coefficient{});
        Coefficient residual = gam[k] - want;
        ok &= residual.is_zero();
        tab << k << "; " << to_string(gam[k]) << "; " << to_string(residual) << "\n";
    }
    rep.table(tab.str());
    rep.check("recurrence_" + to_string(model) + tag(t), ok);
    if (model == Model::Minus) {
        auto w = negative_ell_weight(t, spec.K);
        rep.check("recurrence_neg_psi_geometric" + tag(t), w.form == ClosedForm::Geometric);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prefundamental module verification driver"};
    app.require_subcommand(1);
    JobSpec spec;
    auto common = [&spec](CLI::App* sub) {
        sub->add_option("--family", spec.family, "A or D")->check(CLI::IsMember({"A", "D"}));
        sub->add_option("--n", spec.n, "rank");
        sub->add_option("--r", spec.r, "minuscule node");
        sub->add_option("--height", spec.height, "box bound on every simple-root coordinate");
        sub->add_option("--bound", spec.bound, "explicit box bound, comma separated");
        sub->add_option("--K", spec.K, "truncation level");
        sub->add_option("--seed", spec.seed, "seed for random data");
        sub->add_option("--random", spec.random, "number of random data");
        sub->add_option("--model", spec.model, "pos or neg")->check(CLI::IsMember({"pos", "neg"}));
        sub->add_option("--format", spec.format, "text or lines")->check(CLI::IsMember({"text", "lines"}));
        sub->add_option("--output", spec.output, "write the report to this file");
        sub->add_flag("--verbose", spec.verbose, "dump the root-vector catalog");
        sub->add_flag("--serial", spec.serial, "use the serial sweep");
    };
    std::vector<std::pair<CLI::App*, void (*)(const JobSpec&, Report&)>> cmds = {
        {app.add_subcommand("relations", "defining relations on the lattice module"), cmd_relations},
        {app.add_subcommand("lweight", "l-weight of the vacuum"), cmd_lweight},
        {app.add_subcommand("character", "character against the product formula"), cmd_character},
        {app.add_subcommand("braid", "reading words and convex orders"), cmd_braid},
        {app.add_subcommand("rank1", "A_1^(1) laboratory"), cmd_rank1},
        {app.add_subcommand("recurrence", "string recurrence for E_{k delta - alpha_r}"), cmd_recurrence},
    };
    for (auto& c : cmds) common(c.first);
    CLI11_PARSE(app, argc, argv);

    Report rep(spec);
    for (auto& [sub, fn] : cmds) {
        if (!sub->parsed()) continue;
        try {
            if (spec.verbose && sub->get_name() != "rank1") rep.verbose(catalog_dump(spec.type()));
            fn(spec, rep);
        } catch (const std::exception& e) {
            rep.check(sub->get_name() + "_error", false, e.what());
        }
    }
    if (!spec.output.empty()) {
        std::ofstream f(spec.output);
        f << rep.str();
    } else {
        std::cout << rep.str();
    }
    return rep.failed() ? 1 : 0;
}
