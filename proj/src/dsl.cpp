#include "latgraph/dsl.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <variant>
#include <vector>

namespace latgraph {

namespace {

using Arg = std::variant<std::size_t, Graph>;

struct Signature {
    std::vector<char> kinds;  // 'n' integer, 'g' graph
    std::function<Graph(const std::vector<Arg>&)> build;
};

std::size_t num(const Arg& a) { return std::get<std::size_t>(a); }
const Graph& gr(const Arg& a) { return std::get<Graph>(a); }

const std::map<std::string, Signature>& table() {
    static const std::map<std::string, Signature> t{
        {"empty", {{'n'}, [](auto& a) { return empty_graph(num(a[0])); }}},
        {"complete", {{'n'}, [](auto& a) { return complete(num(a[0])); }}},
        {"cycle", {{'n'}, [](auto& a) { return cycle(num(a[0])); }}},
        {"path", {{'n'}, [](auto& a) { return path(num(a[0])); }}},
        {"hamming", {{'n', 'n'}, [](auto& a) { return hamming(num(a[0]), num(a[1])); }}},
        {"kneser", {{'n', 'n'}, [](auto& a) { return kneser(num(a[0]), num(a[1])); }}},
        {"johnson", {{'n', 'n'}, [](auto& a) { return johnson(num(a[0]), num(a[1])); }}},
        {"folded_cube", {{'n'}, [](auto& a) { return folded_cube(num(a[0])); }}},
        {"petersen", {{}, [](auto&) { return petersen(); }}},
        {"clebsch", {{}, [](auto&) { return clebsch(); }}},
        {"shrikhande", {{}, [](auto&) { return shrikhande(); }}},
        {"schlafli", {{}, [](auto&) { return schlafli(); }}},
        {"gosset", {{}, [](auto&) { return gosset(); }}},
        {"line_graph", {{'g'}, [](auto& a) { return line_graph(gr(a[0])); }}},
        {"complement", {{'g'}, [](auto& a) { return complement(gr(a[0])); }}},
        {"disjoint_union", {{'g', 'n'}, [](auto& a) { return disjoint_union(gr(a[0]), num(a[1])); }}},
        {"cartesian", {{'g', 'g'}, [](auto& a) { return cartesian(gr(a[0]), gr(a[1])); }}},
        {"direct", {{'g', 'g'}, [](auto& a) { return direct(gr(a[0]), gr(a[1])); }}},
        {"tensor", {{'g', 'g'}, [](auto& a) { return direct(gr(a[0]), gr(a[1])); }}},
        {"strong", {{'g', 'g'}, [](auto& a) { return strong(gr(a[0]), gr(a[1])); }}},
        {"lexicographic", {{'g', 'g'}, [](auto& a) { return lexicographic(gr(a[0]), gr(a[1])); }}},
    };
    return t;
}

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    Graph parse() {
        std::string label;
        Graph g = expr(label);
        skip();
        if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
        return relabeled(g, label);
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Graph expr(std::string& label) {
        skip();
        const std::size_t start = pos_;
        std::string name;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            name += s_[pos_++];
        if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0])))
            throw ParseError("expected a graph name", start);
        auto it = table().find(name);
        if (it == table().end()) throw ParseError("unknown graph '" + name + "'", start);
        const Signature& sig = it->second;

        std::vector<Arg> args;
        std::vector<std::string> labels;
        if (eat('(')) {
            do {
                skip();
                const std::size_t at = pos_;
                if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                    std::size_t v = 0;
                    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                        if (v > 100000) throw ParseError("integer too large", at);
                        v = v * 10 + static_cast<std::size_t>(s_[pos_++] - '0');
                    }
                    args.emplace_back(v);
                    labels.push_back(std::to_string(v));
                } else {
                    std::string sub;
                    args.emplace_back(expr(sub));
                    labels.push_back(sub);
                }
                if (args.size() > sig.kinds.size()) throw ParseError("too many arguments to " + name, at);
                const char want = sig.kinds[args.size() - 1];
                if ((want == 'n') != std::holds_alternative<std::size_t>(args.back()))
                    throw ParseError(std::string("argument ") + std::to_string(args.size()) + " of " + name +
                                         (want == 'n' ? " must be an integer" : " must be a graph"),
                                     at);
            } while (eat(','));
            if (!eat(')')) throw ParseError("expected ')'", pos_);
        }
        if (args.size() != sig.kinds.size())
            throw ParseError(name + " takes " + std::to_string(sig.kinds.size()) + " argument(s)", start);
        label = name;
        if (!labels.empty()) {
            label += '(';
            for (std::size_t i = 0; i < labels.size(); ++i) label += (i ? "," : "") + labels[i];
            label += ')';
        }
        try {
            return sig.build(args);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), start);
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Graph parse_graph(std::string_view text) { return Parser(text).parse(); }

std::string graph_dsl_help() {
    return "Graph expressions:\n"
           "  expr := name | name(arg, ...)      arg := integer | expr\n"
           "  empty(n) complete(n) cycle(n) path(n) hamming(d,q) kneser(n,k) johnson(n,k)\n"
           "  folded_cube(d) petersen clebsch shrikhande schlafli gosset\n"
           "  line_graph(g) complement(g) disjoint_union(g,copies)\n"
           "  cartesian(g,h) direct(g,h) tensor(g,h) strong(g,h) lexicographic(g,h)\n"
           "Example: cartesian(complete(3),cycle(4))\n";
}

}  // namespace latgraph
