#include "gpsort/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace gpsort {

const char* to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::scale: return "scale";
    case ExperimentKind::stagnate: return "stagnate";
    case ExperimentKind::probe: return "probe";
  }
  return "?";
}

std::string ExperimentSpec::id() const {
  if (kind == ExperimentKind::probe) return "probe";
  std::string s = to_string(kind);
  s += '-';
  s += to_string(measure);
  s += '-';
  s += to_string(variant);
  s += '-';
  s += to_string(init);
  return s;
}

void ExperimentSpec::validate() const {
  if (n_values.empty()) throw std::invalid_argument("need at least one n value");
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (n_values[i] < 2) throw std::invalid_argument("n must be at least 2");
    if (i > 0 && n_values[i] <= n_values[i - 1])
      throw std::invalid_argument("n values must be strictly increasing");
  }
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (budget < 1) throw std::invalid_argument("budget must be at least 1");
  if (workers < 1) throw std::invalid_argument("workers must be at least 1");
  if (kind == ExperimentKind::stagnate) {
    const bool w1_pair = init == InitMode::w1 &&
                         (measure == MeasureKind::run || measure == MeasureKind::las);
    const bool w2_pair = init == InitMode::w2 &&
                         (measure == MeasureKind::ham || measure == MeasureKind::exc);
    if (!w1_pair && !w2_pair)
      throw std::invalid_argument(
          "stagnation pairs init w1 with run/las and init w2 with ham/exc");
  }
  if (kind == ExperimentKind::probe)
    for (int n : n_values)
      if (n < 3) throw std::invalid_argument("probe needs n >= 3");
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t row_index) {
  return base_seed ^ mix64(row_index);
}

const char* const kCsvHeader =
    "experiment_id,kind,measure,variant,init,n,trial,seed,evaluations,"
    "hit_optimum,best_fitness,improvements,max_tree_size";

std::string to_csv_row(const TrialRow& r) {
  std::string s;
  s += r.experiment_id;
  s += ',';
  s += to_string(r.kind);
  s += ',';
  s += to_string(r.measure);
  s += ',';
  s += to_string(r.variant);
  s += ',';
  s += to_string(r.init);
  s += ',';
  s += std::to_string(r.n);
  s += ',';
  s += std::to_string(r.trial);
  s += ',';
  s += std::to_string(r.seed);
  s += ',';
  s += std::to_string(r.evaluations);
  s += ',';
  s += r.hit_optimum ? "1" : "0";
  s += ',';
  s += std::to_string(r.best_fitness);
  s += ',';
  s += std::to_string(r.improvements);
  s += ',';
  s += std::to_string(r.max_tree_size);
  return s;
}

FitResult fit_loglog(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3)
    throw std::invalid_argument("log-log fit needs at least 3 points");
  std::vector<double> xs, ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0))
      throw std::invalid_argument("log-log fit needs positive coordinates");
    xs.push_back(std::log(x));
    ys.push_back(std::log(y));
  }
  const double m = double(points.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("log-log fit needs distinct x values");
  FitResult f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double pred = f.intercept + f.slope * xs[i];
    ss_res += (ys[i] - pred) * (ys[i] - pred);
    ss_tot += (ys[i] - my) * (ys[i] - my);
  }
  f.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
  return f;
}

std::vector<RunRecord> run_many(const std::vector<RunConfig>& jobs, int workers) {
  std::vector<RunRecord> out(jobs.size());
  const int w = std::max(1, std::min<int>(workers, int(jobs.size())));
  if (w <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) out[i] = run(jobs[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      out[i] = run(jobs[i]);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(std::size_t(w));
  for (int i = 0; i < w; ++i) pool.emplace_back(drain);
  for (auto& th : pool) th.join();
  return out;
}

namespace {

double median_of(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size();
  return m % 2 ? double(v[m / 2]) : (double(v[m / 2 - 1]) + double(v[m / 2])) / 2.0;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  fs::path p(path);
  if (!p.parent_path().empty()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

void write_csv(const std::string& path, const std::vector<TrialRow>& rows) {
  std::string s = kCsvHeader;
  s += '\n';
  for (const auto& r : rows) {
    s += to_csv_row(r);
    s += '\n';
  }
  write_text_file(path, s);
}

template <typename Y>
void write_dat(const std::string& path, const std::vector<std::pair<int, Y>>& points) {
  std::string s;
  for (const auto& [x, y] : points) {
    s += std::to_string(x);
    s += ' ';
    if constexpr (std::is_same_v<Y, Rational>) s += format_double(y.to_double());
    else s += format_double(double(y));
    s += '\n';
  }
  write_text_file(path, s);
}

ordered_json sidecar_common(const ExperimentSpec& spec) {
  ordered_json j;
  j["experiment_id"] = spec.id();
  j["kind"] = to_string(spec.kind);
  if (spec.kind != ExperimentKind::probe) {
    j["measure"] = to_string(spec.measure);
    j["variant"] = to_string(spec.variant);
    j["init"] = to_string(spec.init);
  }
  j["n_values"] = spec.n_values;
  j["trials"] = spec.trials;
  j["budget"] = spec.budget;
  j["base_seed"] = spec.base_seed;
  return j;
}

ordered_json fit_json(const FitResult& f) {
  return ordered_json{{"slope", f.slope},
                      {"intercept", f.intercept},
                      {"r_squared", f.r_squared}};
}

TrialRow row_from_record(const ExperimentSpec& spec, int n, int trial,
                         const RunRecord& rec) {
  TrialRow r;
  r.experiment_id = spec.id();
  r.kind = spec.kind;
  r.measure = spec.measure;
  r.variant = spec.variant;
  r.init = spec.init;
  r.n = n;
  r.trial = trial;
  r.seed = rec.seed;
  r.evaluations = rec.evaluations_used;
  r.hit_optimum = rec.hit_optimum;
  r.best_fitness = rec.final_fitness.value;
  r.improvements = rec.improvements.size();
  r.max_tree_size = rec.max_tree_size;
  return r;
}

std::vector<RunConfig> build_jobs(const ExperimentSpec& spec) {
  std::vector<RunConfig> jobs;
  jobs.reserve(spec.n_values.size() * std::size_t(spec.trials));
  std::uint64_t row = 0;
  for (int n : spec.n_values)
    for (int trial = 0; trial < spec.trials; ++trial) {
      RunConfig cfg;
      cfg.n = n;
      cfg.measure = spec.measure;
      cfg.variant = spec.variant;
      cfg.init.mode = spec.init;
      cfg.budget = spec.budget;
      cfg.seed = trial_seed(spec.base_seed, row++);
      jobs.push_back(cfg);
    }
  return jobs;
}

}  // namespace

ScaleResult scaling_experiment(const ExperimentSpec& spec) {
  if (spec.kind != ExperimentKind::scale)
    throw std::invalid_argument("spec kind must be scale");
  spec.validate();

  const std::vector<RunConfig> jobs = build_jobs(spec);
  const std::vector<RunRecord> records = run_many(jobs, spec.workers);

  ScaleResult res;
  res.total = int(records.size());
  std::size_t idx = 0;
  for (int n : spec.n_values) {
    std::vector<std::uint64_t> evals;
    evals.reserve(std::size_t(spec.trials));
    for (int trial = 0; trial < spec.trials; ++trial, ++idx) {
      const RunRecord& rec = records[idx];
      res.rows.push_back(row_from_record(spec, n, trial, rec));
      res.solved += rec.hit_optimum ? 1 : 0;
      evals.push_back(rec.evaluations_used);
    }
    res.median_evaluations.push_back({n, median_of(std::move(evals))});
  }
  if (res.median_evaluations.size() >= 3) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& [n, med] : res.median_evaluations) pts.push_back({double(n), med});
    res.fit = fit_loglog(pts);
    res.has_fit = true;
  }

  if (!spec.out_path.empty()) {
    write_csv(spec.out_path + ".csv", res.rows);
    write_dat(spec.out_path + "-median.dat", res.median_evaluations);
    ordered_json j = sidecar_common(spec);
    j["solved"] = res.solved;
    j["total"] = res.total;
    ordered_json meds = ordered_json::array();
    for (const auto& [n, med] : res.median_evaluations) meds.push_back({n, med});
    j["median_evaluations"] = meds;
    if (res.has_fit) j["fit"] = fit_json(res.fit);
    j["status"] = res.solved == res.total ? "solved" : "budget-exhausted";
    std::ostringstream detail;
    detail << res.solved << "/" << res.total << " runs reached the optimum";
    if (res.has_fit) detail << "; median-evaluations slope " << format_double(res.fit.slope);
    j["detail"] = detail.str();
    write_text_file(spec.out_path + ".json", j.dump(2) + "\n");
  }
  return res;
}

StagnationResult stagnation_experiment(const ExperimentSpec& spec) {
  if (spec.kind != ExperimentKind::stagnate)
    throw std::invalid_argument("spec kind must be stagnate");
  spec.validate();
  for (int n : spec.n_values) {
    if (spec.init == InitMode::w1 && n < 3) throw std::invalid_argument("w1 needs n >= 3");
    if (spec.init == InitMode::w2 && n < 3) throw std::invalid_argument("w2 needs n >= 3");
  }

  StagnationResult res;
  if (spec.variant == Variant::single) {
    res.exact_all_zero = true;
    for (int n : spec.n_values) {
      Tree t = spec.init == InitMode::w1 ? worst_case_w1(n) : worst_case_w2(n);
      Rational p = exact_improvement_probability(t, n, spec.measure);
      if (!(p == Rational::zero())) res.exact_all_zero = false;
      res.exact_single_step.push_back({n, p});
    }
    if (!spec.out_path.empty()) {
      write_dat(spec.out_path + "-exact.dat", res.exact_single_step);
      ordered_json j = sidecar_common(spec);
      ordered_json pts = ordered_json::array();
      for (const auto& [n, p] : res.exact_single_step) pts.push_back({n, p.to_string()});
      j["improvement_probabilities"] = pts;
      j["status"] = res.exact_all_zero ? "exact-stagnation" : "improvable";
      j["detail"] = res.exact_all_zero
          ? "one-step improvement probability is exactly 0 at every n"
          : "some n admits a one-step improvement";
      write_text_file(spec.out_path + ".json", j.dump(2) + "\n");
    }
    return res;
  }

  const std::vector<RunConfig> jobs = build_jobs(spec);
  const std::vector<RunRecord> records = run_many(jobs, spec.workers);
  res.total_trials = int(records.size());
  std::size_t idx = 0;
  int solved = 0;
  for (int n : spec.n_values)
    for (int trial = 0; trial < spec.trials; ++trial, ++idx) {
      const RunRecord& rec = records[idx];
      res.rows.push_back(row_from_record(spec, n, trial, rec));
      if (rec.improvements.empty()) ++res.zero_improvement_trials;
      solved += rec.hit_optimum ? 1 : 0;
    }

  if (!spec.out_path.empty()) {
    write_csv(spec.out_path + ".csv", res.rows);
    ordered_json j = sidecar_common(spec);
    j["zero_improvement_trials"] = res.zero_improvement_trials;
    j["total_trials"] = res.total_trials;
    const bool quiet = solved == 0 &&
        res.zero_improvement_trials * 20 >= res.total_trials * 19;  // >= 95%
    j["status"] = quiet ? "statistical-stagnation" : "improvements-observed";
    std::ostringstream detail;
    detail << res.zero_improvement_trials << "/" << res.total_trials
           << " trials saw no accepted improvement within " << spec.budget
           << " evaluations";
    j["detail"] = detail.str();
    write_text_file(spec.out_path + ".json", j.dump(2) + "\n");
  }
  return res;
}

ProbeResult success_probability_sweep(const ExperimentSpec& spec) {
  if (spec.kind != ExperimentKind::probe)
    throw std::invalid_argument("spec kind must be probe");
  spec.validate();

  ProbeResult res;
  res.deletion_fixable.name = "deletion-fixable";
  res.pinpoint_fix.name = "pinpoint-fix";
  for (int n : spec.n_values) {
    res.deletion_fixable.points.push_back({n, exact_success_probability(misplaced_front_tree(n), n)});
    res.pinpoint_fix.points.push_back({n, exact_success_probability(missing_interior_tree(n), n)});
  }
  for (ProbeSeries* s : {&res.deletion_fixable, &res.pinpoint_fix}) {
    if (s->points.size() >= 3) {
      std::vector<std::pair<double, double>> pts;
      for (const auto& [n, p] : s->points) pts.push_back({double(n), p.to_double()});
      s->fit = fit_loglog(pts);
      s->has_fit = true;
    }
  }

  if (!spec.out_path.empty()) {
    write_dat(spec.out_path + "-deletion.dat", res.deletion_fixable.points);
    write_dat(spec.out_path + "-pinpoint.dat", res.pinpoint_fix.points);
    ordered_json j = sidecar_common(spec);
    ordered_json series = ordered_json::array();
    for (const ProbeSeries* s : {&res.deletion_fixable, &res.pinpoint_fix}) {
      ordered_json sj;
      sj["name"] = s->name;
      ordered_json pts = ordered_json::array();
      for (const auto& [n, p] : s->points)
        pts.push_back({n, p.to_string(), p.to_double()});
      sj["points"] = pts;
      if (s->has_fit) sj["fit"] = fit_json(s->fit);
      series.push_back(sj);
    }
    j["series"] = series;
    j["status"] = "ok";
    std::ostringstream detail;
    detail << "one-step success probability";
    if (res.deletion_fixable.has_fit && res.pinpoint_fix.has_fit)
      detail << "; slopes " << format_double(res.deletion_fixable.fit.slope) << " and "
             << format_double(res.pinpoint_fix.fit.slope);
    j["detail"] = detail.str();
    write_text_file(spec.out_path + ".json", j.dump(2) + "\n");
  }
  return res;
}

std::string summary_table(const std::string& dir) {
  struct Entry {
    std::string id, kind, measure, variant, status, detail;
    fs::file_time_type mtime{};
  };
  std::vector<Entry> entries;
  std::vector<std::string> notes;

  if (!fs::is_directory(dir))
    return "no experiment artifacts: " + dir + " is not a directory\n";

  std::vector<fs::path> files;
  for (const auto& de : fs::directory_iterator(dir))
    if (de.is_regular_file() && de.path().extension() == ".json")
      files.push_back(de.path());
  std::sort(files.begin(), files.end());

  for (const auto& p : files) {
    std::ifstream in(p);
    ordered_json j = ordered_json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      notes.push_back("unreadable sidecar: " + p.filename().string());
      continue;
    }
    Entry e;
    e.id = j.value("experiment_id", p.stem().string());
    e.kind = j.value("kind", "");
    e.measure = j.value("measure", "");
    e.variant = j.value("variant", "");
    e.status = j.value("status", "?");
    e.detail = j.value("detail", "");
    e.mtime = fs::last_write_time(p);
    entries.push_back(std::move(e));
  }

  // newest sidecar wins a contested cell
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.mtime < b.mtime; });
  std::map<std::pair<std::string, std::string>, const Entry*> cell;
  for (const auto& e : entries)
    if (e.kind == "scale" || e.kind == "stagnate")
      cell[{e.measure, e.variant}] = &e;

  const char* measures[] = {"inv", "ham", "run", "las", "exc"};
  std::vector<std::string> missing;
  auto cell_text = [&](const char* m, const char* v) -> std::string {
    auto it = cell.find({m, v});
    return it == cell.end() ? "no data" : it->second->status;
  };
  std::size_t wide = 6;  // "single"
  for (const char* m : measures) wide = std::max(wide, cell_text(m, "single").size());

  std::ostringstream os;
  os << "measure  single" << std::string(wide - 6 + 2, ' ') << "multi\n";
  for (const char* m : measures) {
    const std::string single = cell_text(m, "single");
    const std::string multi = cell_text(m, "multi");
    if (single == "no data") missing.push_back(std::string(m) + "/single");
    if (multi == "no data") missing.push_back(std::string(m) + "/multi");
    os << m << std::string(9 - std::string(m).size(), ' ') << single
       << std::string(wide - single.size() + 2, ' ') << multi << "\n";
  }

  bool any_other = false;
  for (const auto& e : entries)
    if (e.kind != "scale" && e.kind != "stagnate") any_other = true;
  if (any_other) {
    os << "\nother artifacts:\n";
    for (const auto& e : entries)
      if (e.kind != "scale" && e.kind != "stagnate")
        os << "  " << e.id << ": " << e.status
           << (e.detail.empty() ? "" : " (" + e.detail + ")") << "\n";
  }

  std::vector<const Entry*> grid_entries;
  for (const auto& [key, e] : cell) grid_entries.push_back(e);
  if (!grid_entries.empty()) {
    os << "\ndetails:\n";
    std::sort(grid_entries.begin(), grid_entries.end(),
              [](const Entry* a, const Entry* b) { return a->id < b->id; });
    for (const Entry* e : grid_entries)
      os << "  " << e->id << ": " << e->detail << "\n";
  }

  if (!missing.empty()) {
    os << "\nno data yet: ";
    for (std::size_t i = 0; i < missing.size(); ++i)
      os << (i ? ", " : "") << missing[i];
    os << "\n";
  }
  for (const auto& n : notes) os << "note: " << n << "\n";
  if (entries.empty()) os << "note: no sidecar files in " << dir << "\n";
  return os.str();
}

}  // namespace gpsort
