#pragma once

#include <filesystem>
#include <iosfwd>

#include "discourse/crf.hpp"
#include "discourse/maxent.hpp"

namespace discourse {

// Plain-text model files:
//
//   #discourse-model<TAB>1
//   kind<TAB>crf|maxent
//   c<TAB><value>
//   labels<TAB><label>[<TAB><label>...]
//   <feature><TAB><label><TAB><weight>          (zero weights omitted)
//   __TRANS__<TAB><from>|<to><TAB><weight>       (crf only)
//
// Weights use the shortest decimal that round-trips.

inline constexpr int kModelFormatVersion = 1;

void save_model(std::ostream& out, const CrfModel& model);
void save_model(std::ostream& out, const MaxentModel& model);
void save_model(const std::filesystem::path& path, const CrfModel& model);
void save_model(const std::filesystem::path& path, const MaxentModel& model);

CrfModel load_crf_model(std::istream& in);
MaxentModel load_maxent_model(std::istream& in);
CrfModel load_crf_model(const std::filesystem::path& path);
MaxentModel load_maxent_model(const std::filesystem::path& path);

/// Shortest round-trip decimal rendering of `x`.
std::string format_double(double x);

}  // namespace discourse
