#include <braidtrees/decorated.hpp>

#include <cctype>
#include <vector>

namespace braidtrees {

namespace {

// --- serialization -------------------------------------------------------

void bin_key(const BinTree& t, const TensorWord& word, std::size_t& next,
             std::string& out) {
    if (t.is_leaf()) {
        out += '|';
        return;
    }
    out += '(';
    bin_key(t.left(), word, next, out);
    out += ' ';
    out += basis_label(word[next++]);
    out += ' ';
    bin_key(t.right(), word, next, out);
    out += ')';
}

void rooted_key(const RootedTree& t, const TensorWord& word, std::size_t& next,
                std::string& out) {
    out += basis_label(word[next++]);
    if (t.children().empty()) return;
    out += '(';
    bool first = true;
    for (const RootedTree& c : t.children()) {
        if (!first) out += ' ';
        first = false;
        rooted_key(c, word, next, out);
    }
    out += ')';
}

void ang_key(const AngTree& t, const TensorWord& word, std::size_t& next,
             std::string& out) {
    if (t.is_leaf()) {
        out += '|';
        return;
    }
    out += '[';
    bool first = true;
    for (const AngTree& b : t.branches()) {
        if (!first) {
            out += ' ';
            out += basis_label(word[next++]);
            out += ' ';
        }
        first = false;
        ang_key(b, word, next, out);
    }
    out += ']';
}

// --- parsing --------------------------------------------------------------

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError("parse error at offset " + std::to_string(pos) +
                          " of \"" + text + "\": " + what);
    }
    bool done() const { return pos >= text.size(); }
    char peek() const {
        if (done()) fail("unexpected end of input");
        return text[pos];
    }
    void expect(char c) {
        if (done() || text[pos] != c)
            fail(std::string("expected '") + c + "'");
        ++pos;
    }
    std::int32_t letter() {
        expect('e');
        if (done() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected a digit after 'e'");
        long value = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1'000'000) fail("basis index out of range");
            ++pos;
        }
        if (value < 1) fail("basis indices start at 1");
        return static_cast<std::int32_t>(value);
    }
};

BinTree parse_bin(Cursor& c, TensorWord& word) {
    if (c.peek() == '|') {
        ++c.pos;
        return BinTree{};
    }
    c.expect('(');
    BinTree left = parse_bin(c, word);
    c.expect(' ');
    std::int32_t v = c.letter();
    c.expect(' ');
    // In-order: the recursive call above already appended the left subtree's
    // letters, so v goes next and the right subtree's letters follow.
    word.push_back(v);
    BinTree right = parse_bin(c, word);
    c.expect(')');
    return graft(left, right);
}

RootedTree parse_rooted(Cursor& c, TensorWord& word) {
    std::int32_t v = c.letter();
    word.push_back(v);
    std::vector<RootedTree> children;
    if (!c.done() && c.peek() == '(') {
        ++c.pos;
        children.push_back(parse_rooted(c, word));
        while (!c.done() && c.peek() == ' ') {
            ++c.pos;
            children.push_back(parse_rooted(c, word));
        }
        c.expect(')');
    }
    return bplus(Forest{std::move(children)});
}

AngTree parse_ang(Cursor& c, TensorWord& word) {
    if (c.peek() == '|') {
        ++c.pos;
        return AngTree{};
    }
    c.expect('[');
    std::vector<AngTree> branches;
    branches.push_back(parse_ang(c, word));
    while (!c.done() && c.peek() == ' ') {
        ++c.pos;
        word.push_back(c.letter());
        c.expect(' ');
        branches.push_back(parse_ang(c, word));
    }
    c.expect(']');
    if (branches.size() < 2) c.fail("an internal vertex needs two branches");
    return angular(std::move(branches));
}

}  // namespace

std::string decorated_key(const BinTree& shape, const TensorWord& word) {
    if (static_cast<int>(word.size()) != slot_count(shape))
        throw DomainError("decoration word does not match shape");
    std::string out;
    std::size_t next = 0;
    bin_key(shape, word, next, out);
    return out;
}

std::string decorated_key(const RootedTree& shape, const TensorWord& word) {
    if (static_cast<int>(word.size()) != slot_count(shape))
        throw DomainError("decoration word does not match shape");
    std::string out;
    std::size_t next = 0;
    rooted_key(shape, word, next, out);
    return out;
}

std::string decorated_key(const Forest& shape, const TensorWord& word) {
    if (static_cast<int>(word.size()) != slot_count(shape))
        throw DomainError("decoration word does not match shape");
    if (shape.trees.empty()) return "()";
    std::string out;
    std::size_t next = 0;
    bool first = true;
    for (const RootedTree& t : shape.trees) {
        if (!first) out += ' ';
        first = false;
        rooted_key(t, word, next, out);
    }
    return out;
}

std::string decorated_key(const AngTree& shape, const TensorWord& word) {
    if (static_cast<int>(word.size()) != slot_count(shape))
        throw DomainError("decoration word does not match shape");
    std::string out;
    std::size_t next = 0;
    ang_key(shape, word, next, out);
    return out;
}

Dec<BinTree> parse_decorated_binary(const std::string& text) {
    Cursor c{text};
    TensorWord word;
    BinTree shape = parse_bin(c, word);
    if (!c.done()) c.fail("trailing input");
    return Dec<BinTree>{std::move(shape), std::move(word)};
}

Dec<RootedTree> parse_decorated_rooted(const std::string& text) {
    Cursor c{text};
    TensorWord word;
    RootedTree shape = parse_rooted(c, word);
    if (!c.done()) c.fail("trailing input");
    return Dec<RootedTree>{std::move(shape), std::move(word)};
}

Dec<Forest> parse_decorated_forest(const std::string& text) {
    if (text == "()") return Dec<Forest>{Forest{{}}, {}};
    Cursor c{text};
    TensorWord word;
    std::vector<RootedTree> trees;
    trees.push_back(parse_rooted(c, word));
    while (!c.done() && c.peek() == ' ') {
        ++c.pos;
        trees.push_back(parse_rooted(c, word));
    }
    if (!c.done()) c.fail("trailing input");
    return Dec<Forest>{Forest{std::move(trees)}, std::move(word)};
}

Dec<AngTree> parse_decorated_angular(const std::string& text) {
    Cursor c{text};
    TensorWord word;
    AngTree shape = parse_ang(c, word);
    if (!c.done()) c.fail("trailing input");
    return Dec<AngTree>{std::move(shape), std::move(word)};
}

}  // namespace braidtrees
