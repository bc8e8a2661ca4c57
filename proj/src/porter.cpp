#include "qexp/porter.hpp"

namespace qexp {

namespace {

// Working state over a mutable copy of the word. The stem is b[0..k];
// j marks the end of the stem preceding the last suffix matched by ends().
class PorterState {
  public:
    explicit PorterState(std::string_view word)
        : b(word), k(static_cast<int>(word.size()) - 1)
    {}

    std::string run()
    {
        if (k <= 1) {
            return b;
        }
        step1ab();
        if (k > 0) {
            step1c();
            step2();
            step3();
            step4();
            step5();
        }
        b.resize(static_cast<std::size_t>(k + 1));
        return b;
    }

  private:
    std::string b;
    int k;
    int j = 0;

    [[nodiscard]] char at(int i) const { return b[static_cast<std::size_t>(i)]; }

    [[nodiscard]] bool cons(int i) const
    {
        switch (at(i)) {
        case 'a':
        case 'e':
        case 'i':
        case 'o':
        case 'u':
            return false;
        case 'y':
            return i == 0 ? true : !cons(i - 1);
        default:
            return true;
        }
    }

    // Number of VC sequences in b[0..j].
    [[nodiscard]] int m() const
    {
        int n = 0;
        int i = 0;
        while (true) {
            if (i > j) {
                return n;
            }
            if (!cons(i)) {
                break;
            }
            ++i;
        }
        ++i;
        while (true) {
            while (true) {
                if (i > j) {
                    return n;
                }
                if (cons(i)) {
                    break;
                }
                ++i;
            }
            ++i;
            ++n;
            while (true) {
                if (i > j) {
                    return n;
                }
                if (!cons(i)) {
                    break;
                }
                ++i;
            }
            ++i;
        }
    }

    [[nodiscard]] bool vowel_in_stem() const
    {
        for (int i = 0; i <= j; ++i) {
            if (!cons(i)) {
                return true;
            }
        }
        return false;
    }

    [[nodiscard]] bool double_consonant(int i) const
    {
        if (i < 1) {
            return false;
        }
        if (at(i) != at(i - 1)) {
            return false;
        }
        return cons(i);
    }

    // consonant-vowel-consonant ending at i, final consonant not w, x or y
    [[nodiscard]] bool cvc(int i) const
    {
        if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) {
            return false;
        }
        const char ch = at(i);
        return !(ch == 'w' || ch == 'x' || ch == 'y');
    }

    bool ends(std::string_view s)
    {
        const int length = static_cast<int>(s.size());
        if (length > k + 1) {
            return false;
        }
        if (std::string_view(b).substr(static_cast<std::size_t>(k + 1 - length),
                                       s.size()) != s) {
            return false;
        }
        j = k - length;
        return true;
    }

    void set_to(std::string_view s)
    {
        b.replace(static_cast<std::size_t>(j + 1), static_cast<std::size_t>(k - j), s);
        k = j + static_cast<int>(s.size());
    }

    void replace_if_measured(std::string_view s)
    {
        if (m() > 0) {
            set_to(s);
        }
    }

    void step1ab()
    {
        if (at(k) == 's') {
            if (ends("sses")) {
                k -= 2;
            } else if (ends("ies")) {
                set_to("i");
            } else if (at(k - 1) != 's') {
                --k;
            }
        }
        if (ends("eed")) {
            if (m() > 0) {
                --k;
            }
        } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
            k = j;
            if (ends("at")) {
                set_to("ate");
            } else if (ends("bl")) {
                set_to("ble");
            } else if (ends("iz")) {
                set_to("ize");
            } else if (double_consonant(k)) {
                --k;
                const char ch = at(k);
                if (ch == 'l' || ch == 's' || ch == 'z') {
                    ++k;
                }
            } else if (m() == 1 && cvc(k)) {
                set_to("e");
            }
        }
    }

    void step1c()
    {
        if (ends("y") && vowel_in_stem()) {
            b[static_cast<std::size_t>(k)] = 'i';
        }
    }

    void step2()
    {
        switch (at(k - 1)) {
        case 'a':
            if (ends("ational")) {
                replace_if_measured("ate");
            } else if (ends("tional")) {
                replace_if_measured("tion");
            }
            break;
        case 'c':
            if (ends("enci")) {
                replace_if_measured("ence");
            } else if (ends("anci")) {
                replace_if_measured("ance");
            }
            break;
        case 'e':
            if (ends("izer")) {
                replace_if_measured("ize");
            }
            break;
        case 'l':
            if (ends("bli")) {
                replace_if_measured("ble");
            } else if (ends("alli")) {
                replace_if_measured("al");
            } else if (ends("entli")) {
                replace_if_measured("ent");
            } else if (ends("eli")) {
                replace_if_measured("e");
            } else if (ends("ousli")) {
                replace_if_measured("ous");
            }
            break;
        case 'o':
            if (ends("ization")) {
                replace_if_measured("ize");
            } else if (ends("ation")) {
                replace_if_measured("ate");
            } else if (ends("ator")) {
                replace_if_measured("ate");
            }
            break;
        case 's':
            if (ends("alism")) {
                replace_if_measured("al");
            } else if (ends("iveness")) {
                replace_if_measured("ive");
            } else if (ends("fulness")) {
                replace_if_measured("ful");
            } else if (ends("ousness")) {
                replace_if_measured("ous");
            }
            break;
        case 't':
            if (ends("aliti")) {
                replace_if_measured("al");
            } else if (ends("iviti")) {
                replace_if_measured("ive");
            } else if (ends("biliti")) {
                replace_if_measured("ble");
            }
            break;
        case 'g':
            if (ends("logi")) {
                replace_if_measured("log");
            }
            break;
        default:
            break;
        }
    }

    void step3()
    {
        switch (at(k)) {
        case 'e':
            if (ends("icate")) {
                replace_if_measured("ic");
            } else if (ends("ative")) {
                replace_if_measured("");
            } else if (ends("alize")) {
                replace_if_measured("al");
            }
            break;
        case 'i':
            if (ends("iciti")) {
                replace_if_measured("ic");
            }
            break;
        case 'l':
            if (ends("ical")) {
                replace_if_measured("ic");
            } else if (ends("ful")) {
                replace_if_measured("");
            }
            break;
        case 's':
            if (ends("ness")) {
                replace_if_measured("");
            }
            break;
        default:
            break;
        }
    }

    void step4()
    {
        bool matched = false;
        switch (at(k - 1)) {
        case 'a':
            matched = ends("al");
            break;
        case 'c':
            matched = ends("ance") || ends("ence");
            break;
        case 'e':
            matched = ends("er");
            break;
        case 'i':
            matched = ends("ic");
            break;
        case 'l':
            matched = ends("able") || ends("ible");
            break;
        case 'n':
            matched = ends("ant") || ends("ement") || ends("ment") || ends("ent");
            break;
        case 'o':
            if (ends("ion") && j >= 0 && (at(j) == 's' || at(j) == 't')) {
                matched = true;
            } else {
                matched = ends("ou");
            }
            break;
        case 's':
            matched = ends("ism");
            break;
        case 't':
            matched = ends("ate") || ends("iti");
            break;
        case 'u':
            matched = ends("ous");
            break;
        case 'v':
            matched = ends("ive");
            break;
        case 'z':
            matched = ends("ize");
            break;
        default:
            break;
        }
        if (matched && m() > 1) {
            k = j;
        }
    }

    void step5()
    {
        j = k;
        if (at(k) == 'e') {
            const int measure = m();
            if (measure > 1 || (measure == 1 && !cvc(k - 1))) {
                --k;
            }
        }
        if (at(k) == 'l' && double_consonant(k) && m() > 1) {
            --k;
        }
    }
};

}  // namespace

std::string porter_stem(std::string_view word)
{
    return PorterState(word).run();
}

}  // namespace qexp
