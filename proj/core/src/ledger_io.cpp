#include "nematic2d/ledger_io.hpp"

#include <fstream>
#include <iomanip>

#include "nematic2d/errors.hpp"

namespace nematic2d {

void write_ledger_rows(const EnergyLedger& ledger, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << "t,E,D_visc,D_dir,D_align1,D_align2,residual,max_div_u,max_unit_violation\n";
  out << std::setprecision(17);
  for (const auto& r : ledger.rows) {
    out << r.t << ',' << r.E << ',' << r.D_visc << ',' << r.D_dir << ',' << r.D_align1 << ','
        << r.D_align2 << ',' << r.residual << ',' << r.max_div_u << ',' << r.max_unit_violation
        << '\n';
  }
  if (!out) throw IoError("write failure on '" + path + "'");
}

void write_ledger_events(const EnergyLedger& ledger, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << "t,cx,cy,r,local_energy,threshold\n";
  out << std::setprecision(17);
  for (const auto& e : ledger.events) {
    out << e.t << ',' << e.cx << ',' << e.cy << ',' << e.radius << ',' << e.local_energy << ','
        << e.threshold << '\n';
  }
  if (!out) throw IoError("write failure on '" + path + "'");
}

}  // namespace nematic2d
