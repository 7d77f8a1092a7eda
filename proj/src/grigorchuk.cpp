#include "valence/monoid.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

// Word problem for the Grigorchuk group, acting on the binary tree by the
// wreath recursion a = swap, b = (a, c), c = (a, d), d = (1, b). A reduced
// word is the identity iff its root action is trivial (even number of a's)
// and both sections are. Sections of a reduced word of length n have length
// at most (n+1)/2, so the recursion bottoms out.

namespace valence::grig {

namespace {

bool is_bcd(char c) { return c == 'b' || c == 'c' || c == 'd'; }

char klein_third(char x, char y) {
    // {1, b, c, d} is a Klein four-group: the product of two distinct
    // non-identity elements is the third.
    return static_cast<char>('b' + 'c' + 'd' - x - y);
}

// Section letter of generator g at coordinate side (0 or 1); 0 means the
// section is trivial there.
char section_letter(char g, int side) {
    switch (g) {
        case 'b': return side == 0 ? 'a' : 'c';
        case 'c': return side == 0 ? 'a' : 'd';
        case 'd': return side == 0 ? 0 : 'b';
        default: return 0;  // 'a' has trivial sections
    }
}

std::mutex memo_mutex;
std::unordered_map<std::string, bool> memo;

bool memo_lookup(const std::string& w, bool& out) {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(w);
    if (it == memo.end()) return false;
    out = it->second;
    return true;
}

void memo_store(const std::string& w, bool value) {
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(w, value);
}

}  // namespace

std::string reduce(const std::string& w) {
    std::string stack;
    for (char ch : w) {
        if (ch != 'a' && !is_bcd(ch)) throw std::invalid_argument("grig: letters must be a,b,c,d");
        char cur = ch;
        while (cur && !stack.empty()) {
            char top = stack.back();
            if (top == cur) {  // every generator is an involution
                stack.pop_back();
                cur = 0;
            } else if (is_bcd(top) && is_bcd(cur)) {
                stack.pop_back();
                cur = klein_third(top, cur);
            } else {
                break;
            }
        }
        if (cur) stack.push_back(cur);
    }
    return stack;
}

bool is_identity(const std::string& w) {
    if (w.empty()) return true;
    if (w.size() == 1) return false;
    int a_count = 0;
    for (char c : w) a_count += (c == 'a');
    if (a_count % 2 != 0) return false;

    bool cached;
    if (memo_lookup(w, cached)) return cached;

    bool result = true;
    for (int side = 0; side < 2 && result; ++side) {
        std::string section;
        int cur = side;
        for (char g : w) {
            if (g == 'a') {
                cur ^= 1;
            } else if (char s = section_letter(g, cur)) {
                section.push_back(s);
            }
        }
        result = is_identity(reduce(section));
    }
    memo_store(w, result);
    return result;
}

}  // namespace valence::grig
