#pragma once

#include <string>

#include "nematic2d/energy_ledger.hpp"

namespace nematic2d {

/// CSV with header "t,E,D_visc,D_dir,D_align1,D_align2,residual,max_div_u,max_unit_violation".
void write_ledger_rows(const EnergyLedger& ledger, const std::string& path);

/// CSV with header "t,cx,cy,r,local_energy,threshold", one line per event.
void write_ledger_events(const EnergyLedger& ledger, const std::string& path);

}  // namespace nematic2d
