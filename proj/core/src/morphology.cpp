#include "cbas/morphology.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

#include "cbas/arabic.hpp"
#include "cbas/utf8.hpp"

namespace cbas {

AffixLists::AffixLists() {
  prefixes_.insert("");
  suffixes_.insert("");
}

AffixLists::AffixLists(std::span<const std::string> prefixes,
                       std::span<const std::string> suffixes)
    : AffixLists() {
  prefixes_.insert(prefixes.begin(), prefixes.end());
  suffixes_.insert(suffixes.begin(), suffixes.end());
}

Pattern Pattern::parse(std::string_view encoded) {
  Pattern p;
  p.encoded_ = std::string(encoded);
  int highest = 0;
  for (char32_t c : utf8::decode(encoded)) {
    if (c >= U'1' && c <= U'9') {
      const int slot = static_cast<int>(c - U'0');
      if (slot > 5) throw std::invalid_argument("slot index above 5");
      if (slot == highest + 1) {
        highest = slot;
      } else if (slot > highest) {
        throw std::invalid_argument("slot " + std::to_string(slot) +
                                    " appears before slot " + std::to_string(highest + 1));
      } else if (slot != 3) {
        throw std::invalid_argument("only slot 3 may repeat, slot " + std::to_string(slot) +
                                    " repeats");
      }
      p.cells_.push_back({0, slot});
    } else if (arabic::is_letter(c)) {
      p.cells_.push_back({c, 0});
    } else {
      throw std::invalid_argument("pattern literal is not an Arabic letter");
    }
  }
  if (highest < 2) throw std::invalid_argument("pattern needs at least two root slots");
  p.arity_ = highest;
  return p;
}

std::optional<std::u32string> Pattern::match(std::u32string_view infix) const {
  if (infix.size() != cells_.size()) return std::nullopt;
  std::u32string root(static_cast<std::size_t>(arity_), U'\0');
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const auto& cell = cells_[i];
    if (cell.slot == 0) {
      if (infix[i] != cell.literal) return std::nullopt;
      continue;
    }
    char32_t& letter = root[static_cast<std::size_t>(cell.slot - 1)];
    if (letter == U'\0') {
      letter = infix[i];
    } else if (letter != infix[i]) {
      return std::nullopt;
    }
  }
  return root;
}

std::u32string Pattern::instantiate(std::u32string_view root) const {
  if (root.size() != static_cast<std::size_t>(arity_)) {
    throw std::invalid_argument("root length does not match pattern arity");
  }
  std::u32string out;
  out.reserve(cells_.size());
  for (const auto& cell : cells_) {
    out.push_back(cell.slot == 0 ? cell.literal : root[static_cast<std::size_t>(cell.slot - 1)]);
  }
  return out;
}

std::optional<std::string> match_pattern(std::string_view infix, const Pattern& pattern) {
  if (auto root = pattern.match(utf8::decode(infix))) return utf8::encode(*root);
  return std::nullopt;
}

std::string instantiate(const Pattern& pattern, std::string_view root) {
  return utf8::encode(pattern.instantiate(utf8::decode(root)));
}

RootDictionary::RootDictionary(std::span<const std::string> roots) {
  for (const auto& r : roots) insert(r);
}

void RootDictionary::insert(std::string_view root) {
  const auto n = utf8::length(root);
  if (n < 3 || n > 5) {
    throw std::invalid_argument("root '" + std::string(root) + "' is not 3 to 5 letters long");
  }
  roots_.emplace(root);
}

std::vector<Segmentation> segment(std::string_view word, const AffixLists& affixes) {
  const std::u32string w = utf8::decode(word);
  const std::size_t n = w.size();
  std::vector<Segmentation> out;
  if (n < 2) return out;
  for (std::size_t plen = 0; plen + 2 <= n; ++plen) {
    std::string prefix = utf8::encode(std::u32string_view(w).substr(0, plen));
    if (!affixes.has_prefix(prefix)) continue;
    for (std::size_t slen = 0; plen + slen + 2 <= n; ++slen) {
      std::string suffix = utf8::encode(std::u32string_view(w).substr(n - slen));
      if (!affixes.has_suffix(suffix)) continue;
      out.push_back({prefix, utf8::encode(std::u32string_view(w).substr(plen, n - plen - slen)),
                     std::move(suffix)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Segmentation& a, const Segmentation& b) {
    const auto la = utf8::length(a.infix);
    const auto lb = utf8::length(b.infix);
    if (la != lb) return la > lb;
    return std::tie(a.prefix, a.suffix) < std::tie(b.prefix, b.suffix);
  });
  return out;
}

std::string describe(const WeakEdit& edit) {
  switch (edit.kind) {
    case WeakEdit::Kind::none:
      return "";
    case WeakEdit::Kind::substitute:
      return "substitute " + utf8::encode(edit.from) + "->" + utf8::encode(edit.to) + " at " +
             std::to_string(edit.position);
    case WeakEdit::Kind::insert:
      return "insert " + utf8::encode(edit.to) + " at " + std::to_string(edit.position);
    case WeakEdit::Kind::double_final:
      return "double final " + utf8::encode(edit.to);
  }
  return "";
}

std::vector<WeakVariant> expand_weak(std::string_view raw_root) {
  static constexpr char32_t kWeak[] = {arabic::kAlef, arabic::kWaw, arabic::kYeh};
  static constexpr char32_t kInsertOrder[] = {arabic::kWaw, arabic::kYeh, arabic::kAlef};

  const std::u32string raw = utf8::decode(raw_root);
  std::vector<WeakVariant> out;
  std::unordered_set<std::u32string> seen;
  auto add = [&](std::u32string variant, WeakEdit edit) {
    if (seen.insert(variant).second) out.push_back({utf8::encode(variant), edit});
  };

  add(raw, {});
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!arabic::is_weak(raw[i])) continue;
    for (char32_t replacement : kWeak) {
      if (replacement == raw[i]) continue;
      std::u32string v = raw;
      v[i] = replacement;
      add(std::move(v), {WeakEdit::Kind::substitute, i, raw[i], replacement});
    }
  }
  if (raw.size() == 2) {
    for (std::size_t pos = 0; pos <= 2; ++pos) {
      for (char32_t letter : kInsertOrder) {
        std::u32string v = raw;
        v.insert(v.begin() + static_cast<std::ptrdiff_t>(pos), letter);
        add(std::move(v), {WeakEdit::Kind::insert, pos, 0, letter});
      }
    }
    add(raw + raw[1], {WeakEdit::Kind::double_final, 2, 0, raw[1]});
  }
  return out;
}

std::vector<CandidateRoot> generate_candidates(std::string_view word, const Resources& resources) {
  std::vector<CandidateRoot> out;
  std::unordered_set<std::string> seen;
  auto consider = [&](std::u32string raw, const Segmentation& seg, const Pattern* pattern) {
    // Dictionary roots spell every hamza as bare alef.
    std::replace_if(raw.begin(), raw.end(), arabic::is_hamza_seat, arabic::kAlef);
    for (auto& variant : expand_weak(utf8::encode(raw))) {
      if (!resources.roots.contains(variant.root) || seen.contains(variant.root)) continue;
      seen.insert(variant.root);
      out.push_back({std::move(variant.root), seg,
                     pattern ? std::optional<Pattern>(*pattern) : std::nullopt, variant.edit});
    }
  };

  for (const auto& seg : segment(word, resources.affixes)) {
    const std::u32string infix = utf8::decode(seg.infix);
    if (infix.size() == 2) {
      consider(infix, seg, nullptr);
      continue;
    }
    for (const auto& pattern : resources.patterns) {
      if (pattern.length() != infix.size()) continue;
      if (auto raw = pattern.match(infix)) consider(std::move(*raw), seg, &pattern);
    }
  }
  return out;
}

}  // namespace cbas
