#include "toploc/toplocal/classify.hpp"

#include <algorithm>

namespace toploc {

namespace {

std::vector<std::vector<std::string>> support_key(const std::vector<PrimeCert>& support) {
  std::vector<std::vector<std::string>> key;
  for (const PrimeCert& m : support) key.push_back(m.key());
  return key;
}

std::vector<std::string> tag_keys(const CompletionReport& c) {
  std::vector<std::string> keys;
  for (const AnalyticPrimeTag& t : c.tags) keys.push_back(t.key());
  std::sort(keys.begin(), keys.end());
  return keys;
}

bool strictly_inside(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

ClassifyReport classify(const std::vector<std::pair<std::string, IdealHandle>>& ideals, const ModuleSpec& M,
                        const Context& ctx) {
  ClassifyReport out;
  std::optional<AsshResult> top;
  std::vector<bool> entry_incomplete;
  for (const auto& [name, ideal] : ideals) {
    AttReport att = att_top(ideal, M, ctx);
    if (!top) top = att.assh;
    SuppReport supp = supp_top(att);
    CompletionReport comp = att_top_completion(att);
    entry_incomplete.push_back(!supp.complete || comp.incomplete);
    out.conditional = out.conditional || att.conditional;
    out.entries.push_back(ClassifyEntry{name, ideal, std::move(supp), std::move(comp)});
  }

  std::vector<std::vector<std::vector<std::string>>> group_keys;
  std::vector<std::vector<std::vector<std::string>>> class_keys;
  for (std::size_t i = 0; i < out.entries.size(); ++i) {
    const ClassifyEntry& e = out.entries[i];
    auto key = support_key(e.support.support);
    auto g = std::find(group_keys.begin(), group_keys.end(), key) - group_keys.begin();
    if (static_cast<std::size_t>(g) == group_keys.size()) {
      group_keys.push_back(key);
      class_keys.emplace_back();
      out.groups.push_back(SupportGroup{e.support.support, {}, {}, 0, true, false});
    }
    SupportGroup& group = out.groups[g];
    auto& keys = class_keys[g];
    auto tags = tag_keys(e.completion);
    auto c = std::find(keys.begin(), keys.end(), tags) - keys.begin();
    if (static_cast<std::size_t>(c) == keys.size()) {
      keys.push_back(tags);
      group.classes.emplace_back();
    }
    group.classes[c].push_back(i);
    group.incomplete = group.incomplete || entry_incomplete[i];
  }

  for (std::size_t g = 0; g < out.groups.size(); ++g) {
    SupportGroup& group = out.groups[g];
    const auto& keys = class_keys[g];
    for (std::size_t i = 0; i < keys.size(); ++i) {
      for (std::size_t j = 0; j < keys.size(); ++j) {
        if (strictly_inside(keys[i], keys[j])) group.quotients.emplace_back(i, j);
      }
    }
    TagUniverse universe = tag_universe(group.support, *top, ctx);
    group.tag_count = universe.tags.size();
    if (!universe.complete) group.incomplete = true;
    group.bound_holds = group.tag_count >= 63 || group.classes.size() <= (std::size_t{1} << group.tag_count);
    out.incomplete = out.incomplete || group.incomplete;
  }
  return out;
}

}  // namespace toploc
