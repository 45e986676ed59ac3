#include "photonbec/sweep.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "photonbec/errors.hpp"
#include "photonbec/pipeline.hpp"

namespace photonbec {

void SweepSpec::validate() const {
  if (steps < 2) throw ValidationError("sweep: steps must be >= 2");
  if (log_scale && !(from > 0.0 && to > 0.0))
    throw ValidationError("sweep: log scale requires positive endpoints");
  // unknown names are rejected by set_config_value with the full key list
  RunConfig probe;
  set_config_value(probe, param, from);
}

namespace {

std::vector<std::string> row_from_reports(double value, const Report& derive,
                                          const Report& feas, const Report& eq,
                                          size_t n_columns) {
  std::vector<std::string> row;
  row.reserve(n_columns);
  row.push_back(format_number(value));
  row.emplace_back();  // error column
  for (const Report* r : {&derive, &feas, &eq})
    for (const auto& f : r->fields)
      row.push_back(f.kind == ReportField::Kind::Number ? format_number(f.num)
                    : f.kind == ReportField::Kind::Boolean ? (f.flag ? "true" : "false")
                                                           : f.text);
  return row;
}

}  // namespace

Table run_sweep(const RunConfig& base, const SweepSpec& spec) {
  spec.validate();
  base.validate();

  // column schema from the base point; prefixed by section
  Table table;
  table.columns.push_back(spec.param);
  table.columns.push_back("error");
  const Report d0 = derive_report(base);
  const Report f0 = feasibility_report(base);
  const Report e0 = equilibrium_report(base);
  for (const auto& f : d0.fields) table.columns.push_back("derive." + f.key);
  for (const auto& f : f0.fields) table.columns.push_back("feasibility." + f.key);
  for (const auto& f : e0.fields) table.columns.push_back("equilibrium." + f.key);

  std::vector<double> values(spec.steps);
  for (int i = 0; i < spec.steps; ++i) {
    const double t = static_cast<double>(i) / (spec.steps - 1);
    values[i] = spec.log_scale
                    ? spec.from * std::pow(spec.to / spec.from, t)
                    : spec.from + (spec.to - spec.from) * t;
  }

  table.rows.assign(spec.steps, {});
#ifdef _OPENMP
  const int jobs = spec.jobs > 0 ? spec.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
  for (int i = 0; i < spec.steps; ++i) {
    RunConfig point = base;
    std::vector<std::string> row;
    try {
      set_config_value(point, spec.param, values[i]);
      point.validate();
      const Report d = derive_report(point);
      const Report f = feasibility_report(point);
      const Report e = equilibrium_report(point);
      row = row_from_reports(values[i], d, f, e, table.columns.size());
    } catch (const std::exception& err) {
      row.assign(table.columns.size(), "");
      row[0] = format_number(values[i]);
      row[1] = err.what();
    }
    row.resize(table.columns.size());
    table.rows[i] = std::move(row);
  }
  return table;
}

}  // namespace photonbec
