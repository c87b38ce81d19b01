#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "hetsim/engine.hpp"

namespace hetsim {

struct SweepRow {
  double value = 0.0;
  std::string topology;
  double ee_mean = 0.0;
  double ee_std = 0.0;
  double capacity_mean = 0.0;
  double power_mean = 0.0;
};

void write_slot_csv(std::ostream& out, std::span<const SlotSummary> trace);
// Same schema restricted to the pico layer.
void write_pico_slot_csv(std::ostream& out, std::span<const SlotSummary> trace);
void write_user_csv(std::ostream& out, std::span<const UserAggregate> users);
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);
void write_histogram_csv(std::ostream& out, const Histogram& histogram);

// Streams per-slot traces of realization 0 while a scenario runs.
class TraceWriter {
 public:
  TraceWriter(std::ostream* users_out, std::ostream* picos_out);
  SlotObserver observer();

 private:
  std::ostream* users_out_;
  std::ostream* picos_out_;
};

// Throws kIoError.
void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace hetsim
