#include "wcg/harness.hpp"

#include <atomic>
#include <thread>

#include "wcg/error.hpp"

namespace wcg {

std::vector<CampaignEntry> default_battery() {
  auto sys = [](int m_rt, int m_sr, int m_st, int Lr, int Ls, int Lt) {
    return CoxeterSystem::make(m_rt, m_sr, m_st, Lr, Ls, Lt);
  };
  const Radii radii;
  return {
      {sys(2, kInfinity, 2, 1, 3, 2), radii},
      {sys(2, kInfinity, kInfinity, 1, 5, 2), radii},
      {sys(2, kInfinity, 4, 1, 2, 3), radii},
      {sys(2, 5, 4, 2, 2, 1), radii},
      {sys(2, 8, 3, 2, 1, 1), radii},
      {sys(2, 3, 3, 1, 1, 1), radii},
      {sys(2, 6, 3, 1, 1, 1), radii},
      {sys(2, kInfinity, 3, 3, 1, 1), radii},
  };
}

namespace {

ConfigResult run_one(const CampaignEntry& entry, const CampaignOptions& opts) {
  ConfigResult res;
  res.config = entry.system.describe();
  res.shape = classify_case(entry.system);
  try {
    res.group = std::make_shared<CoxeterGroup>(entry.system, opts.max_elements);
    CoxeterGroup& g = *res.group;
    std::optional<long> override_bound;
    if (opts.bound_offset != 0) override_bound = compute_bound(g).N + opts.bound_offset;
    res.verify = verify_bound(g, entry.radii.verify_x, entry.radii.verify_y, 1, override_bound);
    for (int section = 4; section <= 6; ++section) {
      auto reps = run_lemma_section(entry.system, section, entry.radii, opts.max_elements, opts.timing);
      for (auto& r : reps) res.suites.push_back(std::move(r));
    }
    const Hecke hecke(g);
    res.a_function = check_a_function_characterization(hecke, entry.radii.lambda_ball, entry.radii.witness_ball);
    res.lowest_cell = check_lowest_cell_witnesses(hecke, entry.radii.witness_ball);
  } catch (const ResourceCapExceeded& e) {
    res.error = res.config + ": " + e.what();
  } catch (const ScopeExceeded& e) {
    res.error = res.config + ": " + e.what();
  }
  res.pass = res.error.empty() && res.verify.pass && res.a_function.pass && res.lowest_cell.pass;
  for (const auto& s : res.suites)
    if (s.status() == SuiteStatus::Fail) res.pass = false;
  return res;
}

}  // namespace

CampaignReport run_campaign(const std::vector<CampaignEntry>& battery, const CampaignOptions& opts) {
  CampaignReport rep;
  rep.configs.resize(battery.size());
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(1, opts.threads)), battery.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < battery.size(); i = next++) rep.configs[i] = run_one(battery[i], opts);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (const auto& c : rep.configs) rep.pass = rep.pass && c.pass;
  return rep;
}

}  // namespace wcg
