// Batch front end: Robinson-Schensted printing, inverse edge dynamics,
// permuton functionals, and the seeded experiment runner.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plab/blocks.hpp"
#include "plab/builtins.hpp"
#include "plab/experiments.hpp"
#include "plab/fomin.hpp"
#include "plab/greene.hpp"
#include "plab/permuton.hpp"
#include "plab/report.hpp"
#include "plab/sample.hpp"
#include "plab/tableau.hpp"
#include "plab/tilde.hpp"
#include "plab/version.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

plab::PermutonSpec load_spec(const std::string& source) {
  for (const auto& key : plab::builtin_names())
    if (key == source) return plab::builtin_spec(source);
  std::ifstream in(source);
  if (!in) throw std::invalid_argument("spec '" + source + "' is neither built-in nor a file");
  nlohmann::json j;
  in >> j;
  plab::PermutonSpec spec = plab::spec_from_json(j);
  if (spec.name.empty()) spec.name = fs::path(source).stem().string();
  return spec;
}

// Every file-producing run records what it wrote next to the outputs.
class OutputDir {
 public:
  OutputDir(std::string dir, std::string command, ordered_json parameters,
            std::uint64_t seed)
      : dir_(std::move(dir)), command_(std::move(command)),
        parameters_(std::move(parameters)), seed_(seed) {
    fs::create_directories(dir_);
  }

  void write(const std::string& filename, const std::string& content) {
    std::ofstream out(fs::path(dir_) / filename, std::ios::binary);
    out << content;
    outputs_.push_back(filename);
  }

  void finalize() {
    ordered_json manifest;
    manifest["command"] = command_;
    manifest["parameters"] = parameters_;
    manifest["seed"] = seed_;
    manifest["library_version"] = plab::kVersion;
    manifest["outputs"] = outputs_;
    std::ofstream out(fs::path(dir_) / "manifest.json", std::ios::binary);
    out << manifest.dump(2) << "\n";
  }

 private:
  std::string dir_;
  std::string command_;
  ordered_json parameters_;
  std::uint64_t seed_ = 0;
  std::vector<std::string> outputs_;
};

void print_tableau(const char* name, const plab::Tableau& t) {
  std::cout << name << ":\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? " " : "") << row[i];
    std::cout << "\n";
  }
}

void print_report(const plab::ExperimentReport& rep) {
  for (const auto& row : rep.rows) {
    std::cout << "[" << to_string(row.status) << "] " << row.label;
    if (row.n > 0) std::cout << " n=" << row.n;
    std::cout << " estimate=" << plab::format_double(row.estimate)
              << " reference=" << plab::format_double(row.reference) << " ("
              << row.reference_source << ")"
              << " tolerance=" << plab::format_double(row.tolerance) << "\n";
  }
  for (const auto& note : rep.notes) std::cout << "note: " << note << "\n";
  std::cout << "overall: " << to_string(rep.overall()) << "\n";
}

int finish_experiment(const plab::ExperimentReport& rep, const std::string& outdir,
                      const std::string& command) {
  print_report(rep);
  OutputDir out(outdir, command, rep.parameters, rep.seed);
  out.write("report.json", rep.to_json_string());
  out.write("report.csv", rep.to_csv());
  out.finalize();
  switch (rep.overall()) {
    case plab::CheckStatus::Pass:
      return 0;
    case plab::CheckStatus::Inconclusive:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"words, tableaux, edge dynamics and permuton experiments"};
  app.set_version_flag("--version", plab::kVersion);
  app.require_subcommand(1);

  // ------------------------------------------------------------------ rs
  auto* rs = app.add_subcommand("rs", "tableaux, shape and subsequence table of a word");
  std::vector<int> rs_letters;
  rs->add_option("letters", rs_letters, "word in one-line notation")->required();
  bool rs_fomin = false;
  std::string rs_grid_file;
  int rs_kmax = 0;
  std::vector<int> rs_rect;
  rs->add_flag("--fomin", rs_fomin, "print the edge grid (permutations only)");
  rs->add_option("--grid", rs_grid_file, "write the vertex-diagram grid as CSV");
  rs->add_option("--kmax", rs_kmax, "rows of the subsequence table (default: word length)");
  rs->add_option("--rect", rs_rect, "print the four border words of a grid rectangle i0 j0 i1 j1")
      ->expected(4);

  // ---------------------------------------------------------------- finv
  auto* finv = app.add_subcommand("finv", "inverse edge dynamics on a pair of words");
  std::string finv_top, finv_right;
  finv->add_option("--top", finv_top, "top word, right-to-left")->required();
  finv->add_option("--right", finv_right, "right word, top-to-bottom")->required();

  // ------------------------------------------------------------ permuton
  auto* perm = app.add_subcommand("permuton", "permuton spec operations");
  perm->require_subcommand(1);
  std::string p_spec = "identity";
  std::string p_out;
  std::uint64_t p_seed = 1;

  auto* pv = perm->add_subcommand("validate", "check the uniform-marginal property");
  double pv_tol = 1e-9;
  pv->add_option("--spec", p_spec, "built-in key or JSON file")->required();
  pv->add_option("--tol", pv_tol, "marginal density tolerance");

  auto* ps = perm->add_subcommand("sample", "sample a permutation");
  int ps_n = 10;
  std::string ps_points;
  ps->add_option("--spec", p_spec)->required();
  ps->add_option("--n", ps_n)->required();
  ps->add_option("--seed", p_seed)->envname("PERMUTON_LAB_SEED");
  ps->add_option("--points", ps_points, "also write the raw points as CSV");
  ps->add_option("--out", p_out, "output directory for files");

  auto* pl = perm->add_subcommand("lis", "k-chain functional");
  int pl_k = 1;
  int pl_discretize = 0;
  pl->add_option("--spec", p_spec)->required();
  pl->add_option("--k", pl_k);
  pl->add_option("--discretize", pl_discretize,
                 "use the atom oracle with this many atoms per unit mass");

  auto* psh = perm->add_subcommand("shape", "row and column limit shape");
  int psh_kmax = 4;
  psh->add_option("--spec", p_spec)->required();
  psh->add_option("--kmax", psh_kmax);

  auto* plam = perm->add_subcommand("lambda", "tableau function on a lattice, as CSV");
  int plam_kmax = 2, plam_grid = 20;
  plam->add_option("--spec", p_spec)->required();
  plam->add_option("--kmax", plam_kmax);
  plam->add_option("--grid", plam_grid, "lattice subdivisions per axis");
  plam->add_option("--out", p_out, "output directory")->required();

  auto* pd = perm->add_subcommand("decompose", "split into increasing, decreasing, rest");
  pd->add_option("--spec", p_spec)->required();
  pd->add_option("--out", p_out, "write the three part specs as JSON");

  auto* pm = perm->add_subcommand("mirror", "reflect x to 1-x");
  pm->add_option("--spec", p_spec)->required();
  pm->add_option("--out", p_out, "write the mirrored spec as JSON");

  // ------------------------------------------------------------------ exp
  auto* exp = app.add_subcommand("exp", "seeded experiments with reports");
  exp->require_subcommand(1);
  std::string e_spec, e_out = "out";
  std::uint64_t e_seed = 1;
  int e_workers = plab::default_workers();
  std::vector<long> e_ns;
  long e_replicates = 10000;

  const auto add_common = [&](CLI::App* sub, bool needs_n) {
    sub->add_option("--spec", e_spec)->required();
    sub->add_option("--seed", e_seed)->envname("PERMUTON_LAB_SEED");
    sub->add_option("--workers", e_workers, "worker threads (1 = fully serial)");
    sub->add_option("--out", e_out, "report directory");
    if (needs_n) sub->add_option("--n", e_ns, "sample sizes (repeatable)")->required();
  };

  auto* ec = exp->add_subcommand("convergence", "LIS_k / n against the chain functional");
  int ec_k = 1;
  double ec_tol = 0.02;
  add_common(ec, true);
  ec->add_option("--k", ec_k);
  ec->add_option("--replicates", e_replicates);
  ec->add_option("--tolerance", ec_tol);

  auto* eu = exp->add_subcommand("upper-tail", "rare upper tail against the Bernoulli rate");
  int eu_k = 1;
  double eu_alpha = 0.8, eu_gap = 0.15, eu_slack = 0.005;
  add_common(eu, true);
  eu->add_option("--k", eu_k);
  eu->add_option("--alpha", eu_alpha)->required();
  eu->add_option("--replicates", e_replicates);
  eu->add_option("--rate-gap-tol", eu_gap);
  eu->add_option("--trend-slack", eu_slack);

  auto* ei = exp->add_subcommand("identity-probability", "P(sample = id)^(1/n)");
  double ei_tol = 0.1;
  add_common(ei, true);
  ei->add_option("--replicates", e_replicates);
  ei->add_option("--tolerance", ei_tol);

  auto* el = exp->add_subcommand("lower-tail", "P(LIS < beta n) against binomial bounds");
  double el_beta = 0.5;
  add_common(el, true);
  el->add_option("--beta", el_beta)->required();
  el->add_option("--replicates", e_replicates);

  auto* ed = exp->add_subcommand("derivative", "directional derivatives against phi");
  double ed_x = 1, ed_y = 1, ed_t = 1, ed_s = 1, ed_eps = 1.0 / 64, ed_tol = 1e-6;
  int ed_kmax = 2;
  add_common(ed, false);
  ed->add_option("--x", ed_x)->required();
  ed->add_option("--y", ed_y)->required();
  ed->add_option("--t", ed_t);
  ed->add_option("--s", ed_s);
  ed->add_option("--kmax", ed_kmax);
  ed->add_option("--eps", ed_eps);
  ed->add_option("--tolerance", ed_tol);

  auto* eg = exp->add_subcommand("lambda-sup", "sup-norm gap of the sampled tableau function");
  int eg_k = 1, eg_lattice = 20;
  double eg_tol = 0.05;
  add_common(eg, true);
  eg->add_option("--k", eg_k);
  eg->add_option("--lattice", eg_lattice);
  eg->add_option("--tolerance", eg_tol);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*rs) {
      const plab::Word w = rs_letters;
      bool is_perm = true;
      try {
        plab::Permutation probe(w);
      } catch (const std::invalid_argument&) {
        is_perm = false;
      }
      const auto [p, q] = plab::rs_tableaux(w);
      print_tableau("P", p);
      print_tableau("Q", q);
      std::cout << "shape: " << p.shape().str() << "\n";
      const int kmax = rs_kmax > 0 ? rs_kmax : std::max<int>(1, static_cast<int>(w.size()));
      const plab::GreeneTable t = plab::greene_invariants(w, kmax);
      std::cout << "k lis lds\n";
      for (int k = 1; k <= kmax; ++k)
        std::cout << k << " " << t.lis[k - 1] << " " << t.lds[k - 1] << "\n";
      if ((rs_fomin || !rs_grid_file.empty() || !rs_rect.empty()) && !is_perm)
        throw std::invalid_argument("--fomin/--grid/--rect need a permutation");
      if (rs_fomin || !rs_rect.empty()) {
        const plab::Permutation s(w);
        const plab::EdgeGrid g = plab::fomin_direct(s);
        if (rs_fomin) {
          std::cout << "north word: " << plab::format_word(g.top_word(0, 0, g.n, g.n)) << "\n";
          std::cout << "east word: " << plab::format_word(g.right_word(0, 0, g.n, g.n)) << "\n";
          for (int j = g.n; j >= 1; --j) {
            std::cout << "h j=" << j << ":";
            for (int i = 1; i <= g.n; ++i) std::cout << " " << g.h[i][j];
            std::cout << "\n";
            std::cout << "v j=" << j << ":";
            for (int i = 0; i <= g.n; ++i) std::cout << " " << g.v[i][j];
            std::cout << "\n";
          }
        }
        if (!rs_rect.empty()) {
          const int i0 = rs_rect[0], j0 = rs_rect[1], i1 = rs_rect[2], j1 = rs_rect[3];
          std::cout << "top: " << plab::format_word(g.top_word(i0, j0, i1, j1)) << "\n";
          std::cout << "right: " << plab::format_word(g.right_word(i0, j0, i1, j1)) << "\n";
          std::cout << "bottom: " << plab::format_word(g.bottom_word(i0, j0, i1, j1)) << "\n";
          std::cout << "left: " << plab::format_word(g.left_word(i0, j0, i1, j1)) << "\n";
        }
      }
      if (!rs_grid_file.empty()) {
        const plab::LambdaGrid grid{plab::Permutation(w)};
        std::ofstream out(rs_grid_file, std::ios::binary);
        grid.write_csv(out);
      }
      return 0;
    }

    if (*finv) {
      const plab::InversePair f =
          plab::fomin_inverse_checked(plab::parse_word(finv_top), plab::parse_word(finv_right));
      std::cout << "bottom: " << plab::format_word(f.bottom) << "\n";
      std::cout << "left: " << plab::format_word(f.left) << "\n";
      return 0;
    }

    if (*pv) {
      const plab::ValidationResult r = plab::validate_marginals(load_spec(p_spec), pv_tol);
      std::cout << (r.ok ? "ok" : ("invalid: " + r.message)) << "\n";
      return r.ok ? 0 : 1;
    }

    if (*ps) {
      const plab::PermutonSpec spec = load_spec(p_spec);
      plab::Rng rng(plab::splitmix64(p_seed));
      const plab::SampleResult s = plab::sample_permutation_points(spec, ps_n, rng, &std::cerr);
      std::cout << plab::format_word(s.perm.word()) << "\n";
      if (!ps_points.empty() || !p_out.empty()) {
        OutputDir out(p_out.empty() ? "." : p_out, "permuton sample",
                      ordered_json{{"spec", p_spec}, {"n", ps_n}}, p_seed);
        if (!ps_points.empty()) {
          std::string csv = "x,y\n";
          for (const auto& pt : s.points)
            csv += plab::format_double(pt.x) + "," + plab::format_double(pt.y) + "\n";
          out.write(ps_points, csv);
        }
        out.write("permutation.txt", plab::format_word(s.perm.word()) + "\n");
        out.finalize();
      }
      return 0;
    }

    if (*pl) {
      const plab::PermutonSpec spec = load_spec(p_spec);
      if (pl_discretize > 0) {
        const plab::DiscretizedValue d = plab::lis_tilde_discretized(spec, pl_k, pl_discretize);
        std::cout << plab::format_double(d.value) << " +/- " << plab::format_double(d.error_bound)
                  << "\n";
      } else {
        try {
          const plab::Frac v = plab::lis_tilde_exact_frac(spec, pl_k);
          std::cout << plab::format_double(v.to_double()) << " (exact " << v.str() << ")\n";
        } catch (const plab::NotNonCrossing&) {
          const plab::DiscretizedValue d = plab::lis_tilde_discretized(spec, pl_k, 400);
          std::cout << plab::format_double(d.value) << " +/- "
                    << plab::format_double(d.error_bound) << " (discretized fallback)\n";
        }
      }
      return 0;
    }

    if (*psh) {
      const plab::Shape s = plab::sh_tilde(load_spec(p_spec), psh_kmax);
      std::cout << "alpha:";
      for (const auto& a : s.alpha) std::cout << " " << a.str();
      std::cout << "\nbeta:";
      for (const auto& b : s.beta) std::cout << " " << b.str();
      std::cout << "\n";
      return 0;
    }

    if (*plam) {
      const plab::PermutonSpec spec = load_spec(p_spec);
      const plab::LambdaTilde lam(spec);
      std::string csv = "x,y,k,value\n";
      for (int a = 0; a <= plam_grid; ++a)
        for (int b = 0; b <= plam_grid; ++b)
          for (int k = 1; k <= plam_kmax; ++k) {
            const plab::Frac x(a, plam_grid), y(b, plam_grid);
            csv += plab::format_double(x.to_double()) + "," +
                   plab::format_double(y.to_double()) + "," + std::to_string(k) + "," +
                   plab::format_double(lam.value(x, y, k).to_double()) + "\n";
          }
      OutputDir out(p_out, "permuton lambda",
                    ordered_json{{"spec", p_spec}, {"kmax", plam_kmax}, {"grid", plam_grid}}, 0);
      out.write("lambda.csv", csv);
      out.finalize();
      std::cout << "wrote lambda.csv\n";
      return 0;
    }

    if (*pd) {
      const plab::Decomposition d = plab::decompose(load_spec(p_spec));
      std::cout << "incr " << plab::format_double(d.incr.total_mass().to_double()) << "\n"
                << "decr " << plab::format_double(d.decr.total_mass().to_double()) << "\n"
                << "sub " << plab::format_double(d.sub.total_mass().to_double()) << "\n";
      if (!p_out.empty()) {
        OutputDir out(p_out, "permuton decompose", ordered_json{{"spec", p_spec}}, 0);
        out.write("incr.json", plab::spec_to_json(d.incr).dump(2) + "\n");
        out.write("decr.json", plab::spec_to_json(d.decr).dump(2) + "\n");
        out.write("sub.json", plab::spec_to_json(d.sub).dump(2) + "\n");
        out.finalize();
      }
      return 0;
    }

    if (*pm) {
      const plab::PermutonSpec m = plab::mirror(load_spec(p_spec));
      const std::string text = plab::spec_to_json(m).dump(2) + "\n";
      if (!p_out.empty()) {
        OutputDir out(p_out, "permuton mirror", ordered_json{{"spec", p_spec}}, 0);
        out.write("mirror.json", text);
        out.finalize();
      } else {
        std::cout << text;
      }
      return 0;
    }

    plab::McOptions opt;
    opt.seed = e_seed;
    opt.workers = e_workers;
    if (*ec)
      return finish_experiment(
          plab::convergence_experiment(load_spec(e_spec), ec_k, e_ns, e_replicates, opt, ec_tol), e_out,
          "exp convergence");
    if (*eu)
      return finish_experiment(plab::upper_tail_experiment(load_spec(e_spec), eu_k, eu_alpha, e_ns,
                                                           e_replicates, opt, eu_gap, eu_slack),
                               e_out, "exp upper-tail");
    if (*ei)
      return finish_experiment(
          plab::identity_probability_experiment(load_spec(e_spec), e_ns, e_replicates, opt, ei_tol), e_out,
          "exp identity-probability");
    if (*el)
      return finish_experiment(
          plab::lower_tail_report(load_spec(e_spec), el_beta, e_ns, e_replicates, opt), e_out,
          "exp lower-tail");
    if (*ed)
      return finish_experiment(
          plab::derivative_check(load_spec(e_spec), ed_x, ed_y, ed_t, ed_s, ed_kmax, opt, ed_eps, ed_tol),
          e_out, "exp derivative");
    if (*eg)
      return finish_experiment(
          plab::lambda_supnorm_experiment(load_spec(e_spec), eg_k, e_ns.at(0), eg_lattice, opt, eg_tol),
          e_out, "exp lambda-sup");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
