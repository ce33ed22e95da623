#include "qfb/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qfb {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write output file '" + path + "'");
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw std::runtime_error("error while writing '" + path + "'");
}

void trajectory_row(std::ofstream& out, const TrajectoryRecord& rec,
                    std::size_t k) {
  out << format_double(rec.times[k]) << ',' << rec.outcomes[k] << ','
      << format_double(rec.sz_E[k]) << ',' << format_double(rec.sz_N[k]) << ','
      << format_double(rec.sz_NM[k]) << ',' << format_double(rec.F_EN[k]) << ','
      << format_double(rec.F_EM[k]) << ',' << format_double(rec.F_TE[k]) << ','
      << format_double(rec.F_TN[k]) << ',' << format_double(rec.F_TM[k])
      << '\n';
}

}  // namespace

void write_trajectory_csv(const TrajectoryRecord& rec, bool final_only,
                          const std::string& path) {
  std::ofstream out = open_out(path);
  out << "t,outcome,sz_E,sz_N,sz_NM,F_EN,F_EM,F_TE,F_TN,F_TM\n";
  if (final_only) {
    if (!rec.times.empty()) trajectory_row(out, rec, rec.times.size() - 1);
  } else {
    for (std::size_t k = 0; k < rec.times.size(); ++k)
      trajectory_row(out, rec, k);
  }
  finish(out, path);
}

void write_summary_csv(const std::vector<std::string>& axis_names,
                       const std::vector<SweepPoint>& points, bool final_only,
                       const std::string& path) {
  std::ofstream out = open_out(path);
  for (const std::string& name : axis_names) out << name << ',';
  out << "t,mean_F,std_F\n";
  for (const SweepPoint& point : points) {
    if (point.values.size() != axis_names.size())
      throw std::invalid_argument("write_summary_csv: axis/value count mismatch");
    const std::size_t rows = point.summary.times.size();
    const std::size_t first = final_only && rows > 0 ? rows - 1 : 0;
    for (std::size_t k = first; k < rows; ++k) {
      for (const std::string& v : point.values) out << v << ',';
      out << format_double(point.summary.times[k]) << ','
          << format_double(point.summary.mean_F[k]) << ','
          << format_double(point.summary.std_F[k]) << '\n';
    }
  }
  finish(out, path);
}

void write_feedback_fields_csv(const FeedbackFieldSchedule& sched,
                               const std::string& path) {
  std::ofstream out = open_out(path);
  const std::size_t outcomes =
      sched.fields.empty() ? 0 : sched.fields.front().size();
  out << 't';
  for (std::size_t n = 1; n <= outcomes; ++n)
    out << ",Bx_" << n << ",By_" << n << ",Bz_" << n;
  out << '\n';
  for (std::size_t k = 0; k < sched.times.size(); ++k) {
    out << format_double(sched.times[k]);
    for (const FeedbackHamiltonian& h : sched.fields[k])
      out << ',' << format_double(h.Bx) << ',' << format_double(h.By) << ','
          << format_double(h.Bz);
    out << '\n';
  }
  finish(out, path);
}

}  // namespace qfb
