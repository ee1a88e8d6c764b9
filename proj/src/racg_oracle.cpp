// Search-based reference oracle for the word problem. Deliberately shares no
// logic with reduce(): equality is decided by exhaustive breadth-first
// exploration of elementary moves on words.

#include <cstdint>
#include <deque>
#include <set>
#include <vector>

#include "smallcover/racg.hpp"

namespace smallcover::racg {

namespace {

// Flat open-addressing set of packed word states. Words of length <= 16 over
// at most 15 generators pack into one uint64 (4-bit letters, 0xF = unused),
// which keeps multi-million-state searches affordable.
class PackedSet {
 public:
  PackedSet() : slots_(1 << 16, kEmpty) {}

  bool insert(uint64_t key) {
    if (2 * (size_ + 1) > slots_.size()) grow();
    size_t mask = slots_.size() - 1;
    size_t at = hash(key) & mask;
    while (slots_[at] != kEmpty) {
      if (slots_[at] == key) return false;
      at = (at + 1) & mask;
    }
    slots_[at] = key;
    ++size_;
    return true;
  }
  size_t size() const { return size_; }

 private:
  // the all-ones key cannot arise: it would be a 16-letter word of letter 15,
  // but the packed path is only used for at most 15 generators (letters 0..14)
  static constexpr uint64_t kEmpty = ~uint64_t{0};

  static size_t hash(uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<size_t>(x);
  }
  void grow() {
    std::vector<uint64_t> old = std::move(slots_);
    slots_.assign(old.size() * 2, kEmpty);
    size_ = 0;
    for (uint64_t key : old)
      if (key != kEmpty) insert(key);
  }

  std::vector<uint64_t> slots_;
  size_t size_ = 0;
};

uint64_t pack(const Word& w) {
  uint64_t key = ~uint64_t{0};
  for (size_t i = 0; i < w.size(); ++i) {
    key &= ~(uint64_t{0xF} << (4 * i));
    key |= static_cast<uint64_t>(w[i]) << (4 * i);
  }
  return key;
}

Word unpack(uint64_t key) {
  Word w;
  for (int i = 0; i < 16; ++i) {
    unsigned letter = (key >> (4 * i)) & 0xF;
    if (letter == 0xF) break;
    w.push_back(static_cast<int>(letter));
  }
  return w;
}

// Explores swap moves (adjacent commuting letters) and deletion moves
// (adjacent equal letters). Deletions preserve the represented element and
// shorten the word, so states with a deletion available expand only their
// deletions; swap-only states expand all swaps. Returns true iff the empty
// word is reached.
bool search_packed(const Presentation& W, const Word& start, const OracleLimits& limits) {
  PackedSet visited;
  std::deque<uint64_t> queue;
  visited.insert(pack(start));
  queue.push_back(pack(start));

  while (!queue.empty()) {
    Word cur = unpack(queue.front());
    queue.pop_front();

    std::vector<Word> next;
    for (size_t p = 0; p + 1 < cur.size(); ++p) {
      if (cur[p] == cur[p + 1]) {
        Word shorter = cur;
        shorter.erase(shorter.begin() + static_cast<long>(p),
                      shorter.begin() + static_cast<long>(p) + 2);
        next.push_back(std::move(shorter));
      }
    }
    if (next.empty()) {
      for (size_t p = 0; p + 1 < cur.size(); ++p) {
        if (cur[p] != cur[p + 1] && W.commute(cur[p], cur[p + 1])) {
          Word swapped = cur;
          std::swap(swapped[p], swapped[p + 1]);
          next.push_back(std::move(swapped));
        }
      }
    }

    for (Word& w : next) {
      if (w.empty()) return true;
      if (visited.insert(pack(w))) {
        if (visited.size() > limits.max_states)
          fail(ErrorCode::OracleOverflow,
               "word-graph search exceeded " + std::to_string(limits.max_states) + " states");
        queue.push_back(pack(w));
      }
    }
  }
  return false;
}

// fallback for words that do not fit the packed representation
bool search_general(const Presentation& W, const Word& start, const OracleLimits& limits) {
  std::set<Word> visited{start};
  std::deque<Word> queue{start};

  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();

    std::vector<Word> next;
    for (size_t p = 0; p + 1 < cur.size(); ++p) {
      if (cur[p] == cur[p + 1]) {
        Word shorter = cur;
        shorter.erase(shorter.begin() + static_cast<long>(p),
                      shorter.begin() + static_cast<long>(p) + 2);
        next.push_back(std::move(shorter));
      }
    }
    if (next.empty()) {
      for (size_t p = 0; p + 1 < cur.size(); ++p) {
        if (cur[p] != cur[p + 1] && W.commute(cur[p], cur[p + 1])) {
          Word swapped = cur;
          std::swap(swapped[p], swapped[p + 1]);
          next.push_back(std::move(swapped));
        }
      }
    }

    for (Word& w : next) {
      if (w.empty()) return true;
      if (visited.insert(w).second) {
        if (visited.size() > limits.max_states)
          fail(ErrorCode::OracleOverflow,
               "word-graph search exceeded " + std::to_string(limits.max_states) + " states");
        queue.push_back(std::move(w));
      }
    }
  }
  return false;
}

}  // namespace

bool oracle_is_identity(const Presentation& W, const Word& w, OracleLimits limits) {
  W.check_word(w);
  if (w.empty()) return true;
  if (W.generators() <= 15 && w.size() <= 16) return search_packed(W, w, limits);
  return search_general(W, w, limits);
}

bool oracle_equal(const Presentation& W, const Word& w1, const Word& w2, OracleLimits limits) {
  Word product = w1;
  product.insert(product.end(), w2.rbegin(), w2.rend());
  return oracle_is_identity(W, product, limits);
}

std::vector<Word> oracle_elements(const Presentation& W, std::size_t max_elements,
                                  OracleLimits limits) {
  std::vector<Word> reps{Word{}};
  std::deque<Word> frontier{Word{}};
  while (!frontier.empty()) {
    Word w = std::move(frontier.front());
    frontier.pop_front();
    for (int g = 0; g < W.generators(); ++g) {
      Word cand = w;
      cand.push_back(g);
      bool known = false;
      for (const Word& rep : reps)
        if (oracle_equal(W, cand, rep, limits)) {
          known = true;
          break;
        }
      if (!known) {
        if (reps.size() >= max_elements)
          fail(ErrorCode::OracleOverflow, "group has more than " +
                                              std::to_string(max_elements) + " elements");
        reps.push_back(cand);
        frontier.push_back(std::move(cand));
      }
    }
  }
  return reps;
}

}  // namespace smallcover::racg
