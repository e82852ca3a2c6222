#pragma once

// Breadth-first orbit closure under a finite generator list, with the
// permutation action of each generator recorded on the result.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hermlab/parallel.hpp"

namespace hermlab {

class OrbitCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T, class Key>
struct Orbit {
  std::vector<T> items;  // sorted by key
  std::vector<Key> keys;
  /// action[g][i] = index of generator g applied to items[i].
  std::vector<std::vector<std::uint32_t>> action;

  std::size_t size() const { return items.size(); }
};

/// act(g, x) -> T, key(x) -> Key. Keys must be totally ordered and hashable
/// with Hash; the caller guarantees keys are injective on the orbit.
template <class T, class Key, class Hash, class ActFn, class KeyFn>
Orbit<T, Key> enumerate_orbit(const T& seed, std::size_t generator_count, ActFn&& act, KeyFn&& key,
                              std::size_t cap, unsigned jobs = 1) {
  std::vector<T> items{seed};
  std::vector<Key> keys{key(seed)};
  std::unordered_map<Key, std::uint32_t, Hash> index;
  index.emplace(keys[0], 0);
  std::vector<std::vector<std::uint32_t>> raw(generator_count);

  std::size_t done = 0;
  struct Image {
    T item;
    Key key;
  };
  std::vector<Image> images;
  while (done < items.size()) {
    const std::size_t stop = items.size();
    const std::size_t batch = stop - done;
    images.assign(batch * generator_count, Image{seed, keys[0]});
    parallel_for(batch * generator_count, jobs, [&](std::size_t w) {
      const std::size_t i = done + w / generator_count;
      const std::size_t g = w % generator_count;
      T y = act(g, items[i]);
      Key k = key(y);
      images[w] = Image{std::move(y), std::move(k)};
    });
    for (std::size_t w = 0; w < images.size(); ++w) {
      const std::size_t g = w % generator_count;
      auto [it, fresh] = index.try_emplace(images[w].key, static_cast<std::uint32_t>(items.size()));
      if (fresh) {
        if (items.size() >= cap)
          throw OrbitCapExceeded("orbit exceeds cap of " + std::to_string(cap) + " elements");
        items.push_back(std::move(images[w].item));
        keys.push_back(images[w].key);
      }
      raw[g].push_back(it->second);
    }
    done = stop;
  }

  // raw[g][i] is the image of the i-th discovered element; reorder by key.
  std::vector<std::uint32_t> order(items.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
  std::vector<std::uint32_t> rank(items.size());
  for (std::uint32_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

  Orbit<T, Key> out;
  out.items.reserve(items.size());
  out.keys.reserve(items.size());
  for (auto o : order) {
    out.items.push_back(std::move(items[o]));
    out.keys.push_back(std::move(keys[o]));
  }
  out.action.assign(generator_count, std::vector<std::uint32_t>(items.size()));
  for (std::size_t g = 0; g < generator_count; ++g)
    for (std::uint32_t i = 0; i < items.size(); ++i) out.action[g][rank[i]] = rank[raw[g][i]];
  return out;
}

}  // namespace hermlab
