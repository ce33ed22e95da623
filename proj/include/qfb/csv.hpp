#pragma once

#include <string>
#include <vector>

#include "qfb/ensemble.hpp"
#include "qfb/trajectory.hpp"

namespace qfb {

// One sweep grid point: the axis values as written in the config, plus the
// ensemble result at that point.
struct SweepPoint {
  std::vector<std::string> values;
  EnsembleSummary summary;
};

// All numeric cells use 17 significant digits, so parsing them back recovers
// the exact doubles; undefined cells read "nan".

// Columns: t,outcome,sz_E,sz_N,sz_NM,F_EN,F_EM,F_TE,F_TN,F_TM
void write_trajectory_csv(const TrajectoryRecord& rec, bool final_only,
                          const std::string& path);

// Columns: <axis names...>,t,mean_F,std_F
void write_summary_csv(const std::vector<std::string>& axis_names,
                       const std::vector<SweepPoint>& points, bool final_only,
                       const std::string& path);

// Columns: t then Bx_n,By_n,Bz_n for each outcome n (1-based suffix).
void write_feedback_fields_csv(const FeedbackFieldSchedule& sched,
                               const std::string& path);

std::string format_double(double v);

}  // namespace qfb
