#pragma once

// Shared lazily-built fixtures so the expensive enumerations (GSp4 over F_3
// in particular) happen once per test binary.

#include <map>
#include <memory>

#include "genrest/field.hpp"
#include "genrest/groups.hpp"
#include "genrest/modarith.hpp"
#include "genrest/verify.hpp"

namespace testsupport {

inline const genrest::FieldTable& field(int q) {
    static std::map<int, std::unique_ptr<genrest::FieldTable>> cache;
    auto it = cache.find(q);
    if (it == cache.end())
        it = cache.emplace(q, std::make_unique<genrest::FieldTable>(
                                  genrest::field_build(genrest::parse_prime_power(q))))
                 .first;
    return *it->second;
}

inline const genrest::EnumeratedGroup& group(genrest::Family fam, int q) {
    static std::map<std::pair<int, int>, std::unique_ptr<genrest::EnumeratedGroup>> cache;
    auto key = std::make_pair(static_cast<int>(fam), q);
    auto it = cache.find(key);
    if (it == cache.end()) {
        genrest::BuildOptions opts;
        opts.order_bound = 400000;
        it = cache.emplace(key, genrest::build_group(fam, field(q), opts)).first;
    }
    return *it->second;
}

/// Subgroup of G from its tagged element-index set, as its own group.
inline std::unique_ptr<genrest::EnumeratedGroup> subgroup_from(const genrest::EnumeratedGroup& G,
                                                               const std::vector<int>& elems,
                                                               genrest::Structure st = genrest::Structure::Plain) {
    std::vector<uint64_t> keys;
    keys.reserve(elems.size());
    for (int e : elems) keys.push_back(G.key(e));
    return genrest::EnumeratedGroup::from_key_set(st, G.family(), G.field(), G.dim(), std::move(keys));
}

} // namespace testsupport
