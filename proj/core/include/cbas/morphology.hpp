#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cbas {

/// Prefix and suffix inventories. The empty affix is always a member.
class AffixLists {
 public:
  AffixLists();
  AffixLists(std::span<const std::string> prefixes, std::span<const std::string> suffixes);

  bool has_prefix(std::string_view p) const { return prefixes_.contains(std::string(p)); }
  bool has_suffix(std::string_view s) const { return suffixes_.contains(std::string(s)); }
  const std::set<std::string>& prefixes() const { return prefixes_; }
  const std::set<std::string>& suffixes() const { return suffixes_; }

 private:
  std::set<std::string> prefixes_;
  std::set<std::string> suffixes_;
};

/// A derivational template in digit-slot encoding: ASCII digits 1..5 mark
/// root letters, any other character is a literal letter. "1ا23" is the
/// template usually written فاعل.
///
/// Slots must first appear in the order 1, 2[, 3[, 4[, 5]]]. Only slot 3 may
/// repeat (doubled-radical templates); every occurrence of a repeated slot
/// must carry the same letter when matching. Two-slot templates yield
/// two-letter raw roots, which weak expansion then lengthens.
class Pattern {
 public:
  struct Cell {
    char32_t literal = 0;  ///< valid when slot == 0
    int slot = 0;          ///< 1-based root position, 0 for a literal

    bool operator==(const Cell&) const = default;
  };

  /// Throws std::invalid_argument describing the violated rule.
  static Pattern parse(std::string_view encoded);

  const std::string& encoded() const { return encoded_; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t length() const { return cells_.size(); }
  int arity() const { return arity_; }

  /// Root letters of `infix` if it fits this template, else nullopt.
  std::optional<std::u32string> match(std::u32string_view infix) const;
  /// Fills the slots with `root`, whose length must equal arity().
  std::u32string instantiate(std::u32string_view root) const;

  bool operator==(const Pattern& other) const { return encoded_ == other.encoded_; }

 private:
  std::string encoded_;
  std::vector<Cell> cells_;
  int arity_ = 0;
};

std::optional<std::string> match_pattern(std::string_view infix, const Pattern& pattern);
std::string instantiate(const Pattern& pattern, std::string_view root);

class RootDictionary {
 public:
  RootDictionary() = default;
  /// Throws std::invalid_argument for roots outside 3..5 letters.
  explicit RootDictionary(std::span<const std::string> roots);

  void insert(std::string_view root);
  bool contains(std::string_view root) const { return roots_.contains(std::string(root)); }
  const std::set<std::string>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }

 private:
  std::set<std::string> roots_;
};

struct Segmentation {
  std::string prefix;
  std::string infix;
  std::string suffix;

  bool operator==(const Segmentation&) const = default;
};

/// All (prefix, infix, suffix) splits of `word` with listed affixes and an
/// infix of at least two letters, longest infix first, then by (prefix,
/// suffix).
std::vector<Segmentation> segment(std::string_view word, const AffixLists& affixes);

/// How a variant differs from the raw root that produced it.
struct WeakEdit {
  enum class Kind { none, substitute, insert, double_final };
  Kind kind = Kind::none;
  std::size_t position = 0;  ///< letter index in the raw root (insert: index in the variant)
  char32_t from = 0;
  char32_t to = 0;

  bool operator==(const WeakEdit&) const = default;
};

std::string describe(const WeakEdit& edit);

struct WeakVariant {
  std::string root;
  WeakEdit edit;
};

/// The raw root first, then single weak-letter substitutions (ا/و/ي for
/// one another, left to right). For a two-letter raw root additionally
/// و/ي/ا inserted at each of the three positions, then the final letter
/// doubled. Duplicates are dropped keeping the first.
std::vector<WeakVariant> expand_weak(std::string_view raw_root);

struct Resources {
  AffixLists affixes;
  std::vector<Pattern> patterns;
  RootDictionary roots;
};

/// Reads prefixes.txt, suffixes.txt, patterns.txt and roots.txt from
/// `directory`. Entries are normalized; errors carry file and line.
Resources load_resources(const std::filesystem::path& directory);

struct CandidateRoot {
  std::string root;
  Segmentation segmentation;
  /// Template that produced the raw root; empty for a two-letter infix,
  /// which is expanded with the weak-letter rules directly.
  std::optional<Pattern> pattern;
  WeakEdit weak;
};

/// Every dictionary root reachable from `word` through segmentation,
/// template matching and weak-letter expansion. One entry per root string,
/// keeping the first provenance in (segmentation, template file order,
/// weak variant) order.
std::vector<CandidateRoot> generate_candidates(std::string_view word, const Resources& resources);

}  // namespace cbas
