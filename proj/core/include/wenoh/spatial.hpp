// Dimension-split spatial operator: global Lax-Friedrichs flux splitting in
// local characteristic fields, interface reconstruction, conservative flux
// differencing, and the optional gravity source.
#pragma once

#include "wenoh/euler.hpp"
#include "wenoh/grid.hpp"
#include "wenoh/reconstruct.hpp"
#include "wenoh/worker_pool.hpp"

namespace wenoh {

// Writes the semi-discrete tendency du/dt into dudt (interior cells; ghost
// entries are zeroed). Ghost cells of q must already be filled for the stage
// time. pool may be null for serial execution; stats may be null.
void spatial_operator(FieldArray& dudt, const FieldArray& q, const UniformGrid& g,
                      const FluxModel& model, const ReconParams& params,
                      WorkerPool* pool = nullptr, ReconStats* stats = nullptr);

}  // namespace wenoh
