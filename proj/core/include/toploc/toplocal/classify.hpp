#pragma once

#include <string>
#include <vector>

#include "toploc/toplocal/toplocal.hpp"

namespace toploc {

struct ClassifyEntry {
  std::string name;
  IdealHandle ideal;
  SuppReport support;
  CompletionReport completion;
};

/// Ideals sharing one support, split into isomorphism classes of H^d by
/// their surviving tag sets.
struct SupportGroup {
  std::vector<PrimeCert> support;
  std::vector<std::vector<std::size_t>> classes;  // indices into ClassifyReport::entries
  /// (i, j): class i is a proper quotient of class j (tag set strictly inside).
  std::vector<std::pair<std::size_t, std::size_t>> quotients;
  std::size_t tag_count = 0;
  bool bound_holds = true;
  bool incomplete = false;
};

struct ClassifyReport {
  std::vector<ClassifyEntry> entries;
  std::vector<SupportGroup> groups;
  bool incomplete = false;
  bool conditional = false;
};

ClassifyReport classify(const std::vector<std::pair<std::string, IdealHandle>>& ideals, const ModuleSpec& M,
                        const Context& ctx);

}  // namespace toploc
