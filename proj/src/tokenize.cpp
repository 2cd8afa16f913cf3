#include "lfmlab/tokenize.hpp"

#include <cctype>

namespace lfmlab {

namespace {

enum class CharClass { Space, Letter, Digit, Other };

CharClass classify(unsigned char c) {
    if (std::isspace(c)) return CharClass::Space;
    if (std::isalpha(c)) return CharClass::Letter;
    if (std::isdigit(c)) return CharClass::Digit;
    return CharClass::Other;
}

}  // namespace

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    CharClass cur_class = CharClass::Space;
    auto flush = [&] {
        if (!cur.empty()) {
            out.push_back(cur);
            cur.clear();
        }
    };
    for (char raw : text) {
        unsigned char c = static_cast<unsigned char>(raw);
        CharClass cls = classify(c);
        switch (cls) {
            case CharClass::Space:
                flush();
                break;
            case CharClass::Letter:
            case CharClass::Digit:
                if (cls != cur_class) flush();
                cur.push_back(static_cast<char>(std::tolower(c)));
                break;
            case CharClass::Other:
                // Punctuation never merges into runs.
                flush();
                out.push_back(std::string(1, static_cast<char>(c)));
                break;
        }
        cur_class = cls;
    }
    flush();
    return out;
}

size_t count_tokens(const std::string& text) { return tokenize(text).size(); }

}  // namespace lfmlab
