#pragma once

// Line-oriented reports. The machine format is a version header followed by
// `key: value` lines in a fixed order; the text format aligns the same pairs
// for reading.

#include <string>
#include <utility>
#include <vector>

#include "milnor/graded.hpp"
#include "milnor/oracle.hpp"
#include "milnor/properties.hpp"

namespace milnor::report {

inline constexpr const char* kHeader = "milnor-gr-report v1";

enum class Format { Text, Machine };

class Report {
 public:
  explicit Report(std::string command);

  void add(std::string key, std::string value);
  const std::vector<std::pair<std::string, std::string>>& entries() const noexcept { return entries_; }
  /// Value of the first entry with this key, or "" if absent.
  std::string get(const std::string& key) const;
  std::string render(Format fmt) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

std::string power_string(std::uint32_t p, int log_p);

void add_params(Report& rep, const CDVFParams& params);
void add_descriptor(Report& rep, const CDVFParams& params, const GrDescriptor& desc);
void add_size(Report& rep, const GradedSize& size, std::int64_t window);
void add_element(Report& rep, const std::string& prefix, const GrElement& el);
void add_lemma1(Report& rep, const Lemma1Report& lem);
void add_oracle(Report& rep, const std::string& prefix, const oracle::GradedOrdersReport& orders);
void add_comparison(Report& rep, const oracle::ComparisonReport& cmp);
void add_properties(Report& rep, const std::vector<props::PropertyResult>& results);

}  // namespace milnor::report
