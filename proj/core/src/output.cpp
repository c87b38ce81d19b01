#include "hetsim/output.hpp"

#include <fstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "hetsim/errors.hpp"

namespace hetsim {

void write_slot_csv(std::ostream& out, std::span<const SlotSummary> trace) {
  out << "slot,n_active_picos,macro_active_users,pico_active_users,capacity_bps,power_w,ee_bits_per_joule\n";
  for (const SlotSummary& t : trace) {
    fmt::print(out, "{},{},{},{},{},{},{}\n", t.slot, t.n_active_picos, t.macro_active_users, t.pico_active_users,
               t.capacity_bps, t.power_w, t.ee_bits_per_joule);
  }
}

void write_pico_slot_csv(std::ostream& out, std::span<const SlotSummary> trace) {
  out << "slot,n_active_picos,macro_active_users,pico_active_users,capacity_bps,power_w,ee_bits_per_joule\n";
  for (const SlotSummary& t : trace) {
    fmt::print(out, "{},{},0,{},{},{},{}\n", t.slot, t.n_active_picos, t.pico_active_users, t.pico_capacity_bps,
               t.pico_power_w, t.pico_ee_bits_per_joule);
  }
}

void write_user_csv(std::ostream& out, std::span<const UserAggregate> users) {
  out << "user_id,kind,mean_rate_bps,frac_slots_on_pico\n";
  for (const UserAggregate& u : users) {
    fmt::print(out, "{},{},{},{}\n", u.user_id, to_string(u.kind), u.mean_rate(), u.frac_slots_on_pico());
  }
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "threshold,topology,ee_mean,ee_std,capacity_mean,power_mean\n";
  for (const SweepRow& r : rows) {
    fmt::print(out, "{},{},{},{},{},{}\n", r.value, r.topology, r.ee_mean, r.ee_std, r.capacity_mean, r.power_mean);
  }
}

void write_histogram_csv(std::ostream& out, const Histogram& h) {
  out << "bin_lo,bin_hi,count\n";
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    const double lo = h.lo + h.bin_width * static_cast<double>(i);
    fmt::print(out, "{},{},{}\n", lo, lo + h.bin_width, h.counts[i]);
  }
  fmt::print(out, "{},inf,{}\n", h.lo + h.bin_width * static_cast<double>(h.counts.size()), h.overflow);
}

TraceWriter::TraceWriter(std::ostream* users_out, std::ostream* picos_out)
    : users_out_(users_out), picos_out_(picos_out) {
  if (users_out_) *users_out_ << "slot,user_id,x,y,active,serving_cell\n";
  if (picos_out_) *picos_out_ << "slot,pico_id,mode\n";
}

SlotObserver TraceWriter::observer() {
  return [this](int, int slot, const World& world, const SlotResult& result) {
    if (users_out_) {
      const auto users = world.users();
      for (std::size_t i = 0; i < users.size(); ++i) {
        const UserSlotRecord& rec = result.users[i];
        std::string serving = "none";
        if (rec.serving == ServingKind::kMacro) serving = "macro";
        if (rec.serving == ServingKind::kPico) serving = fmt::format("pico:{}", rec.pico_id);
        fmt::print(*users_out_, "{},{},{},{},{},{}\n", slot, users[i].id, users[i].pos.x, users[i].pos.y,
                   users[i].active ? 1 : 0, serving);
      }
    }
    if (picos_out_) {
      const auto picos = world.pico_states();
      for (std::size_t j = 0; j < picos.size(); ++j) {
        fmt::print(*picos_out_, "{},{},{}\n", slot, j, to_string(picos[j].mode));
      }
    }
  };
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << contents;
  if (!out) throw Error(ErrorCode::kIoError, "short write to " + path.string());
}

}  // namespace hetsim
