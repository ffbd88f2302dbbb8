// Finite semigroups given by Cayley tables, and subsets of them.

#ifndef SEMICONV_SEMIGROUP_HPP_
#define SEMICONV_SEMIGROUP_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semiconv/error.hpp"

namespace semiconv {

  // Elements are identified by their index in input order.
  using Element = std::uint32_t;

  inline constexpr std::size_t kDefaultOrderCap = 1024;

  class ElementSet;

  // An immutable finite semigroup. Copies share the underlying table, and
  // two handles denote the same semigroup iff they share it.
  class Semigroup {
   public:
    using Table = std::vector<std::vector<long long>>;

    std::size_t order() const noexcept {
      return data_->labels.size();
    }

    Element product(Element a, Element b) const noexcept {
      return data_->table[static_cast<std::size_t>(a) * order() + b];
    }

    std::string const& label(Element a) const {
      return data_->labels.at(a);
    }

    std::vector<std::string> const& labels() const noexcept {
      return data_->labels;
    }

    std::optional<Element> find(std::string_view lbl) const {
      auto it = data_->index.find(std::string(lbl));
      if (it == data_->index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    Element element(std::string_view lbl) const {
      auto r = find(lbl);
      if (!r) {
        throw UnknownLabel("\"" + std::string(lbl) + "\"");
      }
      return *r;
    }

    Table table() const {
      Table t(order(), std::vector<long long>(order()));
      for (Element a = 0; a < order(); ++a) {
        for (Element b = 0; b < order(); ++b) {
          t[a][b] = product(a, b);
        }
      }
      return t;
    }

    bool same_as(Semigroup const& other) const noexcept {
      return data_ == other.data_;
    }

    ElementSet all() const;
    ElementSet none() const;
    ElementSet singleton(Element a) const;

    // Checks shape, labels and entry ranges but not associativity. Used for
    // deliberately corrupted inputs; everything else goes through
    // validate_cayley.
    static Semigroup unchecked(std::vector<std::string> labels,
                               Table const&             table,
                               std::size_t max_order = kDefaultOrderCap) {
      return Semigroup(std::move(labels), table, max_order);
    }

    friend Semigroup validate_cayley(std::vector<std::string>,
                                     Table const&,
                                     std::size_t);

   private:
    struct Data {
      std::vector<std::string>                 labels;
      std::vector<Element>                     table;
      std::unordered_map<std::string, Element> index;
    };

    Semigroup(std::vector<std::string> labels,
              Table const&             table,
              std::size_t              max_order) {
      std::size_t const n = labels.size();
      if (n == 0) {
        throw MalformedTable("a semigroup must have at least one element");
      }
      if (n > max_order) {
        throw OrderCapExceeded("order " + std::to_string(n) + " exceeds cap "
                               + std::to_string(max_order));
      }
      if (table.size() != n) {
        throw MalformedTable("expected " + std::to_string(n) + " rows, found "
                             + std::to_string(table.size()));
      }
      auto d = std::make_shared<Data>();
      d->table.resize(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        if (table[a].size() != n) {
          throw MalformedTable("row " + std::to_string(a) + " has "
                               + std::to_string(table[a].size())
                               + " entries, expected " + std::to_string(n));
        }
        for (std::size_t b = 0; b < n; ++b) {
          long long v = table[a][b];
          if (v < 0 || static_cast<std::size_t>(v) >= n) {
            throw IndexOutOfRange(a, b, v);
          }
          d->table[a * n + b] = static_cast<Element>(v);
        }
      }
      for (std::size_t a = 0; a < n; ++a) {
        if (!d->index.emplace(labels[a], static_cast<Element>(a)).second) {
          throw DuplicateLabel("\"" + labels[a] + "\"");
        }
      }
      d->labels = std::move(labels);
      data_     = std::move(d);
    }

    std::shared_ptr<Data const> data_;
  };

  // Builds a semigroup from a Cayley table, checking all n^3 triples for
  // associativity. Throws IndexOutOfRange or NonAssociative (first witness
  // in lexicographic order).
  inline Semigroup validate_cayley(std::vector<std::string> labels,
                                   Semigroup::Table const&  table,
                                   std::size_t max_order = kDefaultOrderCap) {
    Semigroup   s(std::move(labels), table, max_order);
    std::size_t n = s.order();
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        Element ab = s.product(a, b);
        for (Element c = 0; c < n; ++c) {
          if (s.product(ab, c) != s.product(a, s.product(b, c))) {
            throw NonAssociative(
                a,
                b,
                c,
                "(" + s.label(a) + "*" + s.label(b) + ")*" + s.label(c)
                    + " = " + s.label(s.product(ab, c)) + " but "
                    + s.label(a) + "*(" + s.label(b) + "*" + s.label(c)
                    + ") = " + s.label(s.product(a, s.product(b, c))));
          }
        }
      }
    }
    return s;
  }

  // A subset of a semigroup's elements, stored as a bitset.
  class ElementSet {
   public:
    explicit ElementSet(Semigroup parent)
        : parent_(std::move(parent)), words_((parent_.order() + 63) / 64, 0) {}

    ElementSet(Semigroup parent, std::vector<Element> const& members)
        : ElementSet(std::move(parent)) {
      for (Element a : members) {
        insert(a);
      }
    }

    Semigroup const& parent() const noexcept {
      return parent_;
    }

    bool contains(Element a) const noexcept {
      return a < parent_.order() && ((words_[a / 64] >> (a % 64)) & 1U);
    }

    void insert(Element a) {
      if (a >= parent_.order()) {
        throw UnknownLabel("element index " + std::to_string(a)
                           + " out of range");
      }
      words_[a / 64] |= std::uint64_t(1) << (a % 64);
    }

    void erase(Element a) noexcept {
      if (a < parent_.order()) {
        words_[a / 64] &= ~(std::uint64_t(1) << (a % 64));
      }
    }

    std::size_t size() const noexcept {
      std::size_t s = 0;
      for (auto w : words_) {
        s += static_cast<std::size_t>(std::popcount(w));
      }
      return s;
    }

    bool empty() const noexcept {
      for (auto w : words_) {
        if (w != 0) {
          return false;
        }
      }
      return true;
    }

    // Least member; the set must be non-empty.
    Element first() const {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] != 0) {
          return static_cast<Element>(i * 64 + std::countr_zero(words_[i]));
        }
      }
      throw EmptySet("first() of an empty set");
    }

    template <typename Func>
    void for_each(Func&& f) const {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w != 0) {
          f(static_cast<Element>(i * 64 + std::countr_zero(w)));
          w &= w - 1;
        }
      }
    }

    std::vector<Element> members() const {
      std::vector<Element> out;
      out.reserve(size());
      for_each([&](Element a) { out.push_back(a); });
      return out;
    }

    std::vector<std::string> labels() const {
      std::vector<std::string> out;
      for_each([&](Element a) { out.push_back(parent_.label(a)); });
      return out;
    }

    bool is_subset_of(ElementSet const& other) const {
      check_parent(other);
      for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) {
          return false;
        }
      }
      return true;
    }

    ElementSet& operator|=(ElementSet const& other) {
      check_parent(other);
      for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= other.words_[i];
      }
      return *this;
    }

    ElementSet& operator&=(ElementSet const& other) {
      check_parent(other);
      for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= other.words_[i];
      }
      return *this;
    }

    ElementSet& operator-=(ElementSet const& other) {
      check_parent(other);
      for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= ~other.words_[i];
      }
      return *this;
    }

    friend ElementSet operator|(ElementSet a, ElementSet const& b) {
      return a |= b;
    }
    friend ElementSet operator&(ElementSet a, ElementSet const& b) {
      return a &= b;
    }
    friend ElementSet operator-(ElementSet a, ElementSet const& b) {
      return a -= b;
    }

    friend bool operator==(ElementSet const& a, ElementSet const& b) {
      return a.parent_.same_as(b.parent_) && a.words_ == b.words_;
    }

    // Orders by least member first, then by the bitset words; used to sort
    // families of ideals.
    friend bool operator<(ElementSet const& a, ElementSet const& b) {
      bool ae = a.empty(), be = b.empty();
      if (ae || be) {
        return ae && !be;
      }
      if (a.first() != b.first()) {
        return a.first() < b.first();
      }
      return a.words_ < b.words_;
    }

    std::vector<std::uint64_t> const& words() const noexcept {
      return words_;
    }

    void check_parent(ElementSet const& other) const {
      if (!parent_.same_as(other.parent_)) {
        throw MismatchedParent("element sets belong to different semigroups");
      }
    }

   private:
    Semigroup                  parent_;
    std::vector<std::uint64_t> words_;
  };

  struct ElementSetHash {
    std::size_t operator()(ElementSet const& s) const noexcept {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (auto w : s.words()) {
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6)
             + (h >> 2);
      }
      return h;
    }
  };

  inline ElementSet Semigroup::all() const {
    ElementSet s(*this);
    for (Element a = 0; a < order(); ++a) {
      s.insert(a);
    }
    return s;
  }

  inline ElementSet Semigroup::none() const {
    return ElementSet(*this);
  }

  inline ElementSet Semigroup::singleton(Element a) const {
    ElementSet s(*this);
    s.insert(a);
    return s;
  }

  inline ElementSet element_set(Semigroup const&                     s,
                                std::vector<std::string_view> const& labels) {
    ElementSet out(s);
    for (auto l : labels) {
      out.insert(s.element(l));
    }
    return out;
  }

}  // namespace semiconv

#endif  // SEMICONV_SEMIGROUP_HPP_
