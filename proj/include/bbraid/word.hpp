#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bbraid {

// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedToken : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct StrandMismatch : Error {
    using Error::Error;
};

// One occurrence of a generator: x_index^sign (free words) or s_index^sign (braids).
// index is 1-based, sign is +1 or -1.
struct SignedLetter {
    int index = 1;
    int sign = +1;

    SignedLetter inverse() const { return {index, -sign}; }
    friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};

using LetterSeq = std::vector<SignedLetter>;

namespace detail {

// Appends a letter, cancelling it against an adjacent inverse.  Feeding a whole
// word through this yields its free reduction.
inline void push_reduced(LetterSeq& word, SignedLetter l) {
    if (!word.empty() && word.back().index == l.index && word.back().sign == -l.sign) {
        word.pop_back();
    } else {
        word.push_back(l);
    }
}

inline LetterSeq reversed_inverse(const LetterSeq& letters) {
    LetterSeq out;
    out.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        out.push_back(it->inverse());
    }
    return out;
}

}  // namespace detail

// A word in the braid generators s_1 .. s_{strands-1}.  Stored verbatim: no
// cancellation or rewriting happens at this level.
class BraidWord {
public:
    BraidWord() = default;

    explicit BraidWord(int strands) : strands_(strands) {
        if (strands < 1) throw IndexOutOfRange("strand count must be >= 1");
    }

    BraidWord(int strands, LetterSeq letters) : BraidWord(strands) {
        letters_ = std::move(letters);
        for (const SignedLetter& l : letters_) check_letter(l);
    }

    static BraidWord generator(int strands, int index, int sign = +1) {
        return BraidWord(strands, {SignedLetter{index, sign}});
    }

    int strands() const { return strands_; }
    const LetterSeq& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    void push(SignedLetter l) {
        check_letter(l);
        letters_.push_back(l);
    }

    void append(const BraidWord& other) {
        if (other.strands_ != strands_) {
            throw StrandMismatch("cannot append a word on " + std::to_string(other.strands_) +
                                 " strands to one on " + std::to_string(strands_));
        }
        letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    void check_letter(const SignedLetter& l) const {
        if (l.index < 1 || l.index > strands_ - 1) {
            throw IndexOutOfRange("generator s" + std::to_string(l.index) +
                                  " does not exist on " + std::to_string(strands_) + " strands");
        }
        if (l.sign != 1 && l.sign != -1) throw MalformedToken("letter sign must be +1 or -1");
    }

    int strands_ = 1;
    LetterSeq letters_;
};

inline BraidWord compose(const BraidWord& w1, const BraidWord& w2) {
    BraidWord out = w1;
    out.append(w2);
    return out;
}

// Reversed letters with flipped signs.
inline BraidWord invert(const BraidWord& w) {
    return BraidWord(w.strands(), detail::reversed_inverse(w.letters()));
}

inline BraidWord power(const BraidWord& w, int k) {
    if (k < 0) return power(invert(w), -k);
    BraidWord out(w.strands());
    for (int i = 0; i < k; ++i) out.append(w);
    return out;
}

// Same letters regarded as a word on more strands.
inline BraidWord with_strands(const BraidWord& w, int strands) {
    if (strands < w.strands()) {
        for (const SignedLetter& l : w.letters()) {
            if (l.index > strands - 1) {
                throw IndexOutOfRange("word does not fit on " + std::to_string(strands) + " strands");
            }
        }
    }
    return BraidWord(strands, w.letters());
}

// A reduced word in the free group on x_1 .. x_rank.  The constructor reduces,
// so every FreeWord value satisfies the no-adjacent-inverse invariant.
class FreeWord {
public:
    FreeWord() = default;

    explicit FreeWord(int rank) : rank_(rank) {
        if (rank < 1) throw IndexOutOfRange("free group rank must be >= 1");
    }

    FreeWord(int rank, const LetterSeq& letters) : FreeWord(rank) {
        letters_.reserve(letters.size());
        for (const SignedLetter& l : letters) {
            if (l.index < 1 || l.index > rank_) {
                throw IndexOutOfRange("letter x" + std::to_string(l.index) + " exceeds rank " +
                                      std::to_string(rank_));
            }
            detail::push_reduced(letters_, l);
        }
    }

    static FreeWord generator(int rank, int index, int sign = +1) {
        return FreeWord(rank, {SignedLetter{index, sign}});
    }

    int rank() const { return rank_; }
    const LetterSeq& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    friend bool operator==(const FreeWord&, const FreeWord&) = default;

private:
    int rank_ = 1;
    LetterSeq letters_;
};

inline FreeWord free_reduce(int rank, const LetterSeq& letters) {
    return FreeWord(rank, letters);
}

inline FreeWord concat(const FreeWord& a, const FreeWord& b) {
    if (a.rank() != b.rank()) throw IndexOutOfRange("free word ranks differ");
    LetterSeq out = a.letters();
    for (const SignedLetter& l : b.letters()) detail::push_reduced(out, l);
    return FreeWord(a.rank(), out);
}

inline FreeWord inverse(const FreeWord& w) {
    return FreeWord(w.rank(), detail::reversed_inverse(w.letters()));
}

// --- text form -------------------------------------------------------------
//
// Canonical printer: letters separated by single spaces, `s2` for positive and
// `s2^-1` for negative.  parse_braid additionally accepts bare signed integers
// (`2`, `-2`).  The empty word prints as the empty string.

inline std::string to_text(const BraidWord& w) {
    std::string out;
    for (const SignedLetter& l : w.letters()) {
        if (!out.empty()) out += ' ';
        out += 's' + std::to_string(l.index);
        if (l.sign < 0) out += "^-1";
    }
    return out;
}

inline std::string to_text(const FreeWord& w) {
    std::string out;
    for (const SignedLetter& l : w.letters()) {
        if (!out.empty()) out += ' ';
        out += 'x' + std::to_string(l.index);
        if (l.sign < 0) out += "^-1";
    }
    return out;
}

namespace detail {

inline bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

// Token forms: s<k>, s<k>^-1, <k>, -<k> with k >= 1.
inline SignedLetter parse_token(const std::string& tok, int position) {
    const auto fail = [&] {
        throw MalformedToken("malformed token '" + tok + "' at position " + std::to_string(position));
    };
    std::string body = tok;
    int sign = +1;
    if (body.size() >= 2 && body.front() == 's') {
        body.erase(0, 1);
        if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
            sign = -1;
            body.erase(body.size() - 3);
        }
    } else if (body.front() == '-') {
        sign = -1;
        body.erase(0, 1);
    }
    if (!all_digits(body) || body.size() > 9) fail();
    int index = std::stoi(body);
    if (index < 1) fail();
    return SignedLetter{index, sign};
}

}  // namespace detail

inline BraidWord parse_braid(const std::string& text, int strands) {
    BraidWord out{strands};
    std::size_t pos = 0;
    int position = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n')) ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != '\n') ++end;
        ++position;
        SignedLetter l = detail::parse_token(text.substr(pos, end - pos), position);
        if (l.index > strands - 1) {
            throw IndexOutOfRange("token " + std::to_string(position) + " ('" +
                                  text.substr(pos, end - pos) + "'): generator index " +
                                  std::to_string(l.index) + " out of range for " +
                                  std::to_string(strands) + " strands");
        }
        out.push(l);
        pos = end;
    }
    return out;
}

}  // namespace bbraid
