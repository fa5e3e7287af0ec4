#include "reexp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "reexp/sequence_io.hpp"

namespace reexp::cli {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string box_string(const IndexBox& box) {
  std::string s;
  for (std::size_t j = 0; j < box.size(); ++j)
    s += (j ? "," : "") + std::to_string(box[j].lo) + ":" + std::to_string(box[j].hi);
  return s;
}

std::size_t support_size(const CoeffND& a) {
  return static_cast<std::size_t>(std::count_if(a.values().begin(), a.values().end(), [](Complex v) { return v != Complex{}; }));
}

template <class F>
auto parse_flag(const std::string& flag, const std::string& value, F&& f) {
  try {
    return f(value);
  } catch (const std::exception& e) {
    throw UsageError("invalid value for " + flag + " '" + value + "': " + e.what());
  }
}

Su2Op parse_su2_op(const std::string& s) {
  if (s == "q1") return Su2Op::q1;
  if (s == "q2") return Su2Op::q2;
  if (s == "table") return Su2Op::table;
  if (s == "sufficiency") return Su2Op::sufficiency;
  if (s == "character") return Su2Op::character;
  if (s == "telescoping") return Su2Op::telescoping;
  throw std::invalid_argument("expected q1, q2, table, sufficiency, character or telescoping");
}

void require(bool present, const std::string& flag, const std::string& sub) {
  if (!present) throw UsageError(sub + ": missing required flag " + flag);
}

Coeff1D input_1d(const CliInvocation& inv, const std::string& sub) {
  if (!inv.input) throw UsageError(sub + ": missing required flag --input");
  return inv.input->as_1d();
}

void check_floors(const IndexBox& box, const ParityVector& eta) {
  for (std::size_t j = 0; j < box.size(); ++j) {
    if (box[j].empty()) throw UsageError("--range: empty range on axis " + std::to_string(j));
    if (box[j].lo < reexpand_output_floor(eta[j]))
      throw UsageError("--range: axis " + std::to_string(j) + " must start at " +
                       std::to_string(reexpand_output_floor(eta[j])) + " or above for parity " + eta.to_string());
  }
}

void write_or_print(const CliInvocation& inv, const std::string& text, std::ostream& out) {
  if (inv.output_path)
    write_text_atomically(*inv.output_path, text);
  else
    out << text;
}

std::filesystem::path sibling(const std::filesystem::path& p, const std::string& tag) {
  auto q = p;
  q.replace_filename(p.stem().string() + "." + tag + p.extension().string());
  return q;
}

}  // namespace

HighestWeightSU2 parse_half_integer(const std::string& text) {
  const auto slash = text.find('/');
  std::size_t used = 0;
  if (slash != std::string::npos) {
    const int num = std::stoi(text.substr(0, slash), &used);
    if (used != slash || text.substr(slash + 1) != "2") throw std::invalid_argument("expected n/2");
    return HighestWeightSU2(num);
  }
  const double v = std::stod(text, &used);
  if (used != text.size()) throw std::invalid_argument("trailing characters");
  const double twice = 2.0 * v;
  if (twice < 0.0 || twice != std::floor(twice)) throw std::invalid_argument("expected a nonnegative half-integer");
  return HighestWeightSU2(static_cast<int>(twice));
}

IndexBox parse_box(const std::string& text) {
  IndexBox box;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) box.push_back(IndexRange::parse(part));
  if (box.empty()) throw std::invalid_argument("empty range list");
  return box;
}

std::vector<Index> parse_index_list(const std::string& text) {
  std::vector<Index> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    v.push_back(std::stoll(part, &used));
    if (used != part.size()) throw std::invalid_argument("not an integer: " + part);
  }
  if (v.empty()) throw std::invalid_argument("empty list");
  return v;
}

CliInvocation parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Discrete Hilbert transforms, sine/cosine re-expansion and SU(2) central coefficients", "reexp"};
  app.require_subcommand(1);

  std::map<std::string, std::string> s;
  bool subtract_mean = false, no_timing = false;
  auto opt = [&](CLI::App* sub, const std::string& name, const std::string& desc) {
    sub->add_option("--" + name, s[name], desc);
  };

  auto* hil = app.add_subcommand("hilbert", "apply a discrete Hilbert transform");
  auto* rex = app.add_subcommand("reexpand", "re-expand cosine/sine coefficients");
  auto* suf = app.add_subcommand("sufficiency", "windowed summability report");
  auto* su2 = app.add_subcommand("su2", "SU(2) central-function diagnostics");
  auto* ben = app.add_subcommand("bench", "time naive against fast transforms");
  for (auto* sub : {hil, rex, suf, su2, ben}) {
    opt(sub, "output", "output path");
    opt(sub, "algorithm", "naive or fast");
    sub->add_flag("--no-timing", no_timing, "omit wall time from the summary line");
  }
  for (auto* sub : {hil, rex, suf, su2}) opt(sub, "input", "sequence file");
  for (auto* sub : {hil, suf, ben}) opt(sub, "kind", "full, even, odd, even_halved, odd_halved (hilbert also: mixed)");
  for (auto* sub : {hil, rex}) {
    opt(sub, "range", "output range per axis, lo:hi[,lo:hi...]");
    opt(sub, "parity", "parity string such as 10");
  }
  opt(rex, "weight", "weight exponents such as 1,0");
  opt(rex, "boundary-tol", "boundary check tolerance");
  rex->add_flag("--subtract-mean", subtract_mean, "drop the constant term");
  opt(suf, "windows", "increasing window extents");
  opt(su2, "op", "q1, q2, table, sufficiency, character or telescoping");
  opt(su2, "lmax", "largest highest weight l (half-integers allowed)");
  opt(su2, "mode", "paper or character");
  opt(su2, "convention", "nonnegative or paper_signed");
  opt(ben, "sizes", "support sizes");

  CliInvocation inv;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    inv.help = app.help();
    return inv;
  } catch (const CLI::CallForAllHelp&) {
    inv.help = app.help("", CLI::AppFormatMode::All);
    return inv;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  std::string name;
  const std::pair<CLI::App*, Subcommand> subs[] = {{hil, Subcommand::hilbert},
                                                   {rex, Subcommand::reexpand},
                                                   {suf, Subcommand::sufficiency},
                                                   {su2, Subcommand::su2},
                                                   {ben, Subcommand::bench}};
  for (const auto& [app_ptr, sc] : subs)
    if (app_ptr->parsed()) {
      inv.subcommand = sc;
      name = app_ptr->get_name();
    }

  auto has = [&](const std::string& k) { return s.count(k) && !s[k].empty(); };
  inv.subtract_mean = subtract_mean;
  inv.no_timing = no_timing;
  if (has("output")) inv.output_path = s["output"];
  if (has("algorithm")) inv.algorithm = parse_flag("--algorithm", s["algorithm"], [](auto& v) { return parse_algorithm(v); });
  if (has("input")) {
    inv.input_path = s["input"];
    try {
      inv.input = read_sequence_file(*inv.input_path);
    } catch (const std::exception& e) {
      throw UsageError("--input: " + std::string(e.what()));
    }
  }
  if (has("kind")) inv.kind = s["kind"];
  if (has("range")) inv.range = parse_flag("--range", s["range"], [](auto& v) { return parse_box(v); });
  if (has("parity")) inv.parity = parse_flag("--parity", s["parity"], [](auto& v) { return ParityVector::parse(v); });
  if (has("weight")) inv.weight = parse_flag("--weight", s["weight"], [](auto& v) { return WeightExponent::parse(v); });
  if (has("boundary-tol")) {
    inv.boundary_tol = parse_flag("--boundary-tol", s["boundary-tol"], [](auto& v) { return std::stod(v); });
    if (!(inv.boundary_tol > 0.0)) throw UsageError("--boundary-tol must be positive");
  }
  if (has("windows")) inv.windows = parse_flag("--windows", s["windows"], [](auto& v) { return parse_index_list(v); });
  if (has("sizes")) inv.sizes = parse_flag("--sizes", s["sizes"], [](auto& v) { return parse_index_list(v); });
  if (has("op")) inv.op = parse_flag("--op", s["op"], [](auto& v) { return parse_su2_op(v); });
  if (has("lmax")) inv.lmax = parse_flag("--lmax", s["lmax"], [](auto& v) { return parse_half_integer(v); });
  else inv.lmax = HighestWeightSU2(20);
  if (has("mode")) inv.mode = parse_flag("--mode", s["mode"], [](auto& v) { return parse_coeff_mode(v); });
  if (has("convention"))
    inv.convention = parse_flag("--convention", s["convention"], [](auto& v) { return parse_denom_convention(v); });

  const std::size_t rank = inv.input ? inv.input->rank() : 0;
  switch (inv.subcommand) {
    case Subcommand::hilbert: {
      require(inv.kind.has_value(), "--kind", name);
      require(inv.input.has_value(), "--input", name);
      require(!inv.range.empty(), "--range", name);
      if (inv.range.size() != rank)
        throw UsageError("--range has " + std::to_string(inv.range.size()) + " axes but the input has " + std::to_string(rank));
      if (*inv.kind == "mixed") {
        require(inv.parity.has_value(), "--parity", name);
        if (inv.parity->dim() != rank)
          throw UsageError("--parity has " + std::to_string(inv.parity->dim()) + " axes but the input has " + std::to_string(rank));
        check_floors(inv.range, *inv.parity);
      } else {
        const auto kind = parse_flag("--kind", *inv.kind, [](auto& v) { return parse_hilbert_kind(v); });
        if (rank != 1) throw UsageError("--kind " + *inv.kind + " needs a one-dimensional input; use --kind mixed");
        if (inv.parity) throw UsageError("--parity is only valid with --kind mixed");
        if (inv.range[0].empty()) throw UsageError("--range: empty range");
        if (inv.range[0].lo < min_output_index(kind))
          throw UsageError("--range: " + *inv.kind + " output starts at n >= " + std::to_string(min_output_index(kind)));
      }
      break;
    }
    case Subcommand::reexpand: {
      require(inv.input.has_value(), "--input", name);
      require(inv.parity.has_value(), "--parity", name);
      require(!inv.range.empty(), "--range", name);
      if (inv.parity->dim() != rank)
        throw UsageError("--parity has " + std::to_string(inv.parity->dim()) + " axes but the input has " + std::to_string(rank));
      if (!inv.weight) inv.weight = WeightExponent::zeros(rank);
      if (inv.weight->dim() != rank)
        throw UsageError("--weight has " + std::to_string(inv.weight->dim()) + " axes but the input has " + std::to_string(rank));
      if (inv.range.size() != rank)
        throw UsageError("--range has " + std::to_string(inv.range.size()) + " axes but the input has " + std::to_string(rank));
      check_floors(inv.range, *inv.parity);
      break;
    }
    case Subcommand::sufficiency: {
      require(inv.input.has_value(), "--input", name);
      if (rank != 1) throw UsageError("--input must be one-dimensional for sufficiency");
      if (!inv.kind) inv.kind = "even_halved";
      parse_flag("--kind", *inv.kind, [](auto& v) { return parse_hilbert_kind(v); });
      if (inv.windows.empty()) inv.windows = doubling_windows(16, 7);
      for (std::size_t i = 0; i < inv.windows.size(); ++i)
        if (inv.windows[i] < 1 || (i > 0 && inv.windows[i] <= inv.windows[i - 1]))
          throw UsageError("--windows must be positive and increasing");
      break;
    }
    case Subcommand::su2: {
      require(has("op"), "--op", name);
      if (inv.input && rank != 1) throw UsageError("--input must be one-dimensional for su2");
      break;
    }
    case Subcommand::bench: {
      if (!inv.kind) inv.kind = "full";
      parse_flag("--kind", *inv.kind, [](auto& v) { return parse_hilbert_kind(v); });
      if (inv.sizes.empty()) inv.sizes = {1024, 4096};
      for (Index n : inv.sizes)
        if (n < 1) throw UsageError("--sizes must be positive");
      break;
    }
  }
  return inv;
}

BenchRow bench_kind(HilbertKind kind, Index n) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(n) * 7919u + static_cast<std::uint64_t>(kind));
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = u(rng);
  const Coeff1D a(1, std::move(v));
  const TransformRequest naive{kind, {1, n}, Algorithm::naive}, fast{kind, {1, n}, Algorithm::fast};

  auto time = [&](const TransformRequest& req, Coeff1D& result) {
    result = dht(a, req);
    std::vector<double> t;
    for (int i = 0; i < 5; ++i) {
      const auto t0 = std::chrono::steady_clock::now();
      result = dht(a, req);
      t.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    std::sort(t.begin(), t.end());
    return std::array<double, 3>{t[2], t.front(), t.back()};
  };
  Coeff1D rn, rf;
  const auto tn = time(naive, rn);
  const auto tf = time(fast, rf);
  double dev = 0.0, scale = 0.0;
  for (Index k = 1; k <= n; ++k) {
    dev = std::max(dev, std::abs(rn[k] - rf[k]));
    scale = std::max(scale, std::abs(rn[k]));
  }
  return {kind, n, tn[0], tn[1], tn[2], tf[0], tf[1], tf[2], scale > 0.0 ? dev / scale : dev};
}

std::string report_csv(const SummabilityReport& report) {
  std::string s = "window,norm,increment,tail_bound\n";
  for (const auto& r : report.partial_norms)
    s += std::to_string(r.window) + "," + fmt17(r.norm) + "," + fmt17(r.increment) + "," + fmt17(r.tail_bound) + "\n";
  return s;
}

std::string report_csv(const CentralCoeffTable& table) { return to_csv(table); }

std::string report_csv(const std::vector<BenchRow>& rows) {
  std::string s = "kind,n,naive_median_s,naive_min_s,naive_max_s,fast_median_s,fast_min_s,fast_max_s,max_deviation\n";
  for (const auto& r : rows)
    s += to_string(r.kind) + "," + std::to_string(r.n) + "," + fmt17(r.naive_median) + "," + fmt17(r.naive_min) + "," +
         fmt17(r.naive_max) + "," + fmt17(r.fast_median) + "," + fmt17(r.fast_min) + "," + fmt17(r.fast_max) + "," +
         fmt17(r.max_deviation) + "\n";
  return s;
}

void emit_report(const SummabilityReport& report, const std::filesystem::path& path) {
  write_text_atomically(path, report_csv(report));
}
void emit_report(const CentralCoeffTable& table, const std::filesystem::path& path) {
  write_text_atomically(path, report_csv(table));
}
void emit_report(const std::vector<BenchRow>& rows, const std::filesystem::path& path) {
  write_text_atomically(path, report_csv(rows));
}

int run(const CliInvocation& inv, std::ostream& out, std::ostream& err) {
  if (inv.help) {
    out << *inv.help;
    return 0;
  }
  const auto t0 = std::chrono::steady_clock::now();
  std::string summary;
  try {
    switch (inv.subcommand) {
      case Subcommand::hilbert: {
        const CoeffND& a = *inv.input;
        CoeffND b;
        if (*inv.kind == "mixed")
          b = dht_mixed(a, *inv.parity, inv.range, inv.algorithm);
        else
          b = CoeffND(dht(a.as_1d(), {parse_hilbert_kind(*inv.kind), inv.range[0], inv.algorithm}));
        if (inv.output_path)
          write_sequence_file(*inv.output_path, b);
        else
          out << to_sequence_json(b) << "\n";
        summary = "hilbert kind=" + *inv.kind + " support=" + std::to_string(support_size(a)) +
                  " window=" + box_string(inv.range);
        break;
      }
      case Subcommand::reexpand: {
        ReexpandSpec spec{*inv.parity, *inv.weight, inv.subtract_mean, inv.range, inv.algorithm, inv.boundary_tol};
        const CoeffND& a = *inv.input;
        if (inv.weight->is_zero()) {
          const CoeffND b = reexpand_nd(a, spec);
          if (inv.output_path)
            write_sequence_file(*inv.output_path, b);
          else
            out << to_sequence_json(b) << "\n";
        } else {
          const auto w = reexpand_weighted(a, spec);
          for (const auto& msg : w.warnings) err << "warning: " << msg << "\n";
          if (inv.output_path) {
            write_sequence_file(*inv.output_path, w.raw);
            write_sequence_file(sibling(*inv.output_path, "deweighted"), w.deweighted);
          } else {
            out << to_sequence_json(w.raw) << "\n" << to_sequence_json(w.deweighted) << "\n";
          }
          summary = " effective_parity=" + w.effective_eta.to_string() + " sign=" + (w.sign > 0 ? "+1" : "-1") +
                    " undefined=" + std::to_string(w.undefined.size()) +
                    " boundary=" + (w.boundary.all_passed() ? "pass" : "fail");
        }
        summary = "reexpand parity=" + inv.parity->to_string() + " support=" + std::to_string(support_size(a)) +
                  " window=" + box_string(inv.range) + summary;
        break;
      }
      case Subcommand::sufficiency: {
        const Coeff1D a = inv.input->as_1d();
        const auto r = summability_report(a, parse_hilbert_kind(*inv.kind), inv.windows, inv.algorithm);
        write_or_print(inv, report_csv(r), out);
        const auto& m = r.moment_sums.at(0);
        summary = "sufficiency kind=" + *inv.kind + " support=" + std::to_string(support_size(*inv.input)) +
                  " window=" + std::to_string(inv.windows.back()) + " verdict=" + to_string(r.verdict_hint) +
                  " sum=" + fmt_short(m.sum.real()) + " alternating_sum=" + fmt_short(m.alternating_sum.real()) +
                  " log_weighted_sum=" + fmt_short(r.log_weighted_sum);
        break;
      }
      case Subcommand::su2: {
        const Coeff1D a = input_1d(inv, "su2");
        const auto denom = weyl_denom_sq_coeffs(RootSystem::su2(), inv.convention);
        std::string csv, op;
        switch (inv.op) {
          case Su2Op::q1: {
            op = "q1";
            csv = "two_l,partial_sum\n";
            const auto v = condition_q1_sum(a, inv.lmax, denom, inv.mode);
            for (std::size_t i = 0; i < v.size(); ++i) csv += std::to_string(i) + "," + fmt17(v[i]) + "\n";
            break;
          }
          case Su2Op::q2: {
            op = "q2";
            const auto d = q2_diagnostic(a, inv.lmax, denom, inv.mode);
            for (const auto& msg : d.warnings) err << "warning: " << msg << "\n";
            csv = "two_l,left,right,ratio\n";
            for (std::size_t i = 0; i < d.left.size(); ++i)
              csv += std::to_string(i) + "," + fmt17(d.left[i]) + "," + fmt17(d.right[i]) + "," + fmt17(d.ratio[i]) + "\n";
            break;
          }
          case Su2Op::table:
            op = "table";
            csv = report_csv(ext_fourier_table(a, inv.lmax, denom, inv.mode));
            break;
          case Su2Op::character: {
            op = "character";
            csv = "two_l,dim,value_re,value_im\n";
            for (int t = 0; t <= inv.lmax.two_l; ++t) {
              const Complex c = character_coeff(a, HighestWeightSU2(t));
              csv += std::to_string(t) + "," + std::to_string(t + 1) + "," + fmt17(c.real()) + "," + fmt17(c.imag()) + "\n";
            }
            break;
          }
          case Su2Op::telescoping: {
            op = "telescoping";
            csv = "two_l,brute,paper_form,derived_form\n";
            for (int t = 0; t <= inv.lmax.two_l; ++t) {
              const auto r = telescoping_sum(a, HighestWeightSU2(t));
              if (t == 0)
                for (const auto& msg : r.warnings) err << "warning: " << msg << "\n";
              csv += std::to_string(t) + "," + fmt17(r.brute) + "," + fmt17(r.paper_form) + "," + fmt17(r.derived_form) + "\n";
            }
            break;
          }
          case Su2Op::sufficiency: {
            op = "sufficiency";
            const auto r = su2_sufficiency(a);
            out << fmt_short(r.value) << "\n";
            if (inv.output_path) write_text_atomically(*inv.output_path, "value,ignored\n" + fmt17(r.value) + "," + std::to_string(r.ignored) + "\n");
            if (r.ignored) err << "warning: " << r.ignored << " entries at k <= 0 ignored\n";
            break;
          }
        }
        if (!csv.empty()) write_or_print(inv, csv, out);
        summary = "su2 op=" + op + " support=" + std::to_string(support_size(*inv.input)) +
                  " lmax=" + fmt_short(inv.lmax.l());
        break;
      }
      case Subcommand::bench: {
        std::vector<BenchRow> rows;
        for (Index n : inv.sizes) rows.push_back(bench_kind(parse_hilbert_kind(*inv.kind), n));
        write_or_print(inv, report_csv(rows), out);
        double dev = 0.0;
        for (const auto& r : rows) dev = std::max(dev, r.max_deviation);
        summary = "bench kind=" + *inv.kind + " sizes=" + std::to_string(rows.size()) + " max_deviation=" + fmt_short(dev);
        break;
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (!inv.no_timing) {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    summary += " time_ms=" + fmt_short(ms);
  }
  out << summary << "\n";
  return 0;
}

}  // namespace reexp::cli
