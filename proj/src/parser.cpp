#include "sbpi/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

namespace sbpi {

namespace {

constexpr double kRowSumTolerance = 1e-6;

struct Token {
    std::string text;
    int line;
};

// Splits on whitespace, strips '#' comments, and makes ':' its own token
// so "T: 0 : 1 : 2" and "T:0:1:2" tokenize identically.
std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    int line = 1;
    std::string current;
    int current_line = 1;
    auto flush = [&] {
        if (!current.empty()) {
            tokens.push_back({current, current_line});
            current.clear();
        }
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '#') {
            flush();
            while (i < text.size() && text[i] != '\n') ++i;
            ++line;
            continue;
        }
        if (ch == '\n') {
            flush();
            ++line;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            flush();
            continue;
        }
        if (ch == ':') {
            flush();
            tokens.push_back({":", line});
            continue;
        }
        if (current.empty()) current_line = line;
        current.push_back(ch);
    }
    flush();
    return tokens;
}

bool is_directive(const std::string& word) {
    return word == "discount" || word == "values" || word == "states" || word == "actions" ||
           word == "observations" || word == "start" || word == "T" || word == "O" || word == "R";
}

std::optional<double> to_number(const std::string& text) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) return std::nullopt;
    return value;
}

std::optional<long> to_integer(const std::string& text) {
    long value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) return std::nullopt;
    return value;
}

// Abort-this-directive signal; caught inside parse_pomdp's loop, which
// resyncs at the next directive keyword.
struct DirectiveError {};

class Parser {
  public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    ParseResult run() {
        while (!at_end()) {
            std::size_t before = pos_;
            try {
                directive();
            } catch (const DirectiveError&) {
                resync(before);
            }
        }
        finish();
        ParseResult result;
        result.diagnostics = std::move(diagnostics_);
        if (pomdp_) result.pomdp = std::move(pomdp_);
        return result;
    }

  private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<ParseDiagnostic> diagnostics_;
    std::optional<Pomdp> pomdp_;

    double discount_ = -1.0;
    int discount_line_ = 1;
    bool cost_values_ = false;
    int values_line_ = 1;
    std::vector<std::string> states_, actions_, observations_;
    std::optional<std::vector<double>> start_;
    int start_line_ = 1;
    std::vector<double> transition_, observation_, reward4_;
    bool any_reward_ = false;

    bool at_end() const { return pos_ >= tokens_.size(); }
    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_++]; }
    int here() const { return at_end() ? (tokens_.empty() ? 1 : tokens_.back().line) : peek().line; }

    void error(int line, std::string message) {
        diagnostics_.push_back({line, std::move(message), ParseDiagnostic::Severity::Error});
    }
    void warning(int line, std::string message) {
        diagnostics_.push_back({line, std::move(message), ParseDiagnostic::Severity::Warning});
    }
    [[noreturn]] void fail(int line, std::string message) {
        error(line, std::move(message));
        throw DirectiveError{};
    }

    void resync(std::size_t from) {
        pos_ = std::max(pos_, from + 1);
        while (!at_end()) {
            if (is_directive(peek().text) && pos_ + 1 < tokens_.size() &&
                (tokens_[pos_ + 1].text == ":" ||
                 ((peek().text == "start") && tokens_[pos_ + 1].text != ":")))
                return;
            ++pos_;
        }
    }

    void expect_colon(const std::string& after) {
        if (at_end() || peek().text != ":")
            fail(here(), "expected ':' after '" + after + "'");
        next();
    }

    double number_token() {
        if (at_end()) fail(here(), "expected a number, found end of input");
        Token t = next();
        auto value = to_number(t.text);
        if (!value) fail(t.line, "expected a number, found '" + t.text + "'");
        return *value;
    }

    // states:/actions:/observations: accept either a count or a name list.
    std::vector<std::string> identifier_list(const std::string& what) {
        std::vector<std::string> names;
        if (at_end()) fail(here(), "expected " + what + " count or names");
        if (auto count = to_integer(peek().text)) {
            Token t = next();
            if (*count < 1) fail(t.line, what + " count must be positive");
            for (long i = 0; i < *count; ++i) names.push_back(std::to_string(i));
            return names;
        }
        while (!at_end() && !to_number(peek().text) && !is_directive_boundary())
            names.push_back(next().text);
        if (names.empty()) fail(here(), "expected at least one " + what + " name");
        return names;
    }

    bool is_directive_boundary() const {
        return is_directive(peek().text) && pos_ + 1 < tokens_.size() &&
               (tokens_[pos_ + 1].text == ":" ||
                (peek().text == "start" && (tokens_[pos_ + 1].text == "include" ||
                                            tokens_[pos_ + 1].text == "exclude")));
    }

    // Resolves an identifier to index set: a name, a numeric index, or '*'.
    std::vector<int> resolve(const std::vector<std::string>& names, const std::string& what) {
        if (at_end()) fail(here(), "expected " + what + " identifier");
        Token t = next();
        if (t.text == "*") {
            std::vector<int> all(names.size());
            for (std::size_t i = 0; i < names.size(); ++i) all[i] = static_cast<int>(i);
            return all;
        }
        if (auto idx = to_integer(t.text)) {
            if (*idx < 0 || *idx >= static_cast<long>(names.size()))
                fail(t.line, what + " index " + t.text + " out of range");
            return {static_cast<int>(*idx)};
        }
        auto it = std::find(names.begin(), names.end(), t.text);
        if (it == names.end()) fail(t.line, "unknown " + what + " '" + t.text + "'");
        return {static_cast<int>(it - names.begin())};
    }

    void require_preamble(int line) {
        if (states_.empty() || actions_.empty() || observations_.empty())
            fail(line, "states:, actions: and observations: must appear before T:, O:, R: or start:");
        if (transition_.empty()) {
            transition_.assign(states_.size() * actions_.size() * states_.size(), 0.0);
            observation_.assign(actions_.size() * states_.size() * observations_.size(), 0.0);
            reward4_.assign(
                actions_.size() * states_.size() * states_.size() * observations_.size(), 0.0);
        }
    }

    double& t_entry(int a, int s, int s2) {
        return transition_[(static_cast<std::size_t>(s) * actions_.size() + a) * states_.size() +
                           s2];
    }
    double& o_entry(int a, int s2, int z) {
        return observation_[(static_cast<std::size_t>(a) * states_.size() + s2) *
                                observations_.size() +
                            z];
    }
    double& r_entry(int a, int s, int s2, int z) {
        return reward4_[((static_cast<std::size_t>(a) * states_.size() + s) * states_.size() + s2) *
                            observations_.size() +
                        z];
    }

    void directive() {
        Token t = next();
        if (t.text == "discount") {
            expect_colon("discount");
            discount_line_ = here();
            discount_ = number_token();
        } else if (t.text == "values") {
            expect_colon("values");
            if (at_end()) fail(here(), "expected 'reward' or 'cost'");
            Token v = next();
            values_line_ = v.line;
            if (v.text == "cost")
                cost_values_ = true;
            else if (v.text != "reward")
                fail(v.line, "values: must be 'reward' or 'cost', found '" + v.text + "'");
        } else if (t.text == "states") {
            expect_colon("states");
            states_ = identifier_list("state");
        } else if (t.text == "actions") {
            expect_colon("actions");
            actions_ = identifier_list("action");
        } else if (t.text == "observations") {
            expect_colon("observations");
            observations_ = identifier_list("observation");
        } else if (t.text == "start") {
            start_directive(t.line);
        } else if (t.text == "T") {
            expect_colon("T");
            require_preamble(t.line);
            transition_directive();
        } else if (t.text == "O") {
            expect_colon("O");
            require_preamble(t.line);
            observation_directive();
        } else if (t.text == "R") {
            expect_colon("R");
            require_preamble(t.line);
            reward_directive();
        } else {
            fail(t.line, "unknown directive '" + t.text + "'");
        }
    }

    void start_directive(int line) {
        start_line_ = line;
        if (!at_end() && (peek().text == "include" || peek().text == "exclude")) {
            bool include = next().text == "include";
            expect_colon("start include/exclude");
            require_preamble(line);
            std::vector<bool> member(states_.size(), false);
            while (!at_end() && !is_directive_boundary() && peek().text != ":") {
                for (int s : resolve(states_, "state")) member[static_cast<std::size_t>(s)] = true;
            }
            std::vector<double> b(states_.size(), 0.0);
            long count = 0;
            for (std::size_t s = 0; s < member.size(); ++s)
                if (member[s] == include) ++count;
            if (count == 0) fail(line, "start set is empty");
            for (std::size_t s = 0; s < member.size(); ++s)
                if (member[s] == include) b[s] = 1.0 / static_cast<double>(count);
            start_ = std::move(b);
            return;
        }
        expect_colon("start");
        require_preamble(line);
        if (at_end()) fail(here(), "expected start distribution");
        if (peek().text == "uniform") {
            next();
            start_ = std::vector<double>(states_.size(), 1.0 / static_cast<double>(states_.size()));
            return;
        }
        if (!to_number(peek().text) ||
            (to_integer(peek().text) && pos_ + 1 < tokens_.size() &&
             !to_number(tokens_[pos_ + 1].text))) {
            // A single state name or a bare index: point-mass start.
            std::vector<int> idx = resolve(states_, "state");
            if (idx.size() != 1) fail(line, "start state must name a single state");
            std::vector<double> b(states_.size(), 0.0);
            b[static_cast<std::size_t>(idx[0])] = 1.0;
            start_ = std::move(b);
            return;
        }
        std::vector<double> b(states_.size(), 0.0);
        for (std::size_t s = 0; s < states_.size(); ++s) b[s] = number_token();
        double sum = 0.0;
        for (double v : b) sum += v;
        if (std::abs(sum - 1.0) > kRowSumTolerance || *std::min_element(b.begin(), b.end()) < 0.0)
            fail(line, "start distribution must be non-negative and sum to 1");
        for (double& v : b) v /= sum;
        start_ = std::move(b);
    }

    // T: a [: s [: s']]  with matrix / row / single-entry bodies.
    void transition_directive() {
        std::vector<int> as = resolve(actions_, "action");
        if (!at_end() && peek().text == ":") {
            next();
            std::vector<int> ss = resolve(states_, "state");
            if (!at_end() && peek().text == ":") {
                next();
                std::vector<int> s2s = resolve(states_, "state");
                double p = probability_token();
                for (int a : as)
                    for (int s : ss)
                        for (int s2 : s2s) t_entry(a, s, s2) = p;
                return;
            }
            if (!at_end() && peek().text == "uniform") {
                next();
                for (int a : as)
                    for (int s : ss)
                        for (std::size_t s2 = 0; s2 < states_.size(); ++s2)
                            t_entry(a, s, static_cast<int>(s2)) =
                                1.0 / static_cast<double>(states_.size());
                return;
            }
            std::vector<double> row = probability_row(states_.size());
            for (int a : as)
                for (int s : ss)
                    for (std::size_t s2 = 0; s2 < states_.size(); ++s2)
                        t_entry(a, s, static_cast<int>(s2)) = row[s2];
            return;
        }
        if (!at_end() && peek().text == "uniform") {
            next();
            for (int a : as)
                for (std::size_t s = 0; s < states_.size(); ++s)
                    for (std::size_t s2 = 0; s2 < states_.size(); ++s2)
                        t_entry(a, static_cast<int>(s), static_cast<int>(s2)) =
                            1.0 / static_cast<double>(states_.size());
            return;
        }
        if (!at_end() && peek().text == "identity") {
            next();
            for (int a : as)
                for (std::size_t s = 0; s < states_.size(); ++s)
                    for (std::size_t s2 = 0; s2 < states_.size(); ++s2)
                        t_entry(a, static_cast<int>(s), static_cast<int>(s2)) = s == s2 ? 1.0 : 0.0;
            return;
        }
        for (std::size_t s = 0; s < states_.size(); ++s) {
            std::vector<double> row = probability_row(states_.size());
            for (int a : as)
                for (std::size_t s2 = 0; s2 < states_.size(); ++s2)
                    t_entry(a, static_cast<int>(s), static_cast<int>(s2)) = row[s2];
        }
    }

    void observation_directive() {
        std::vector<int> as = resolve(actions_, "action");
        if (!at_end() && peek().text == ":") {
            next();
            std::vector<int> s2s = resolve(states_, "state");
            if (!at_end() && peek().text == ":") {
                next();
                std::vector<int> zs = resolve(observations_, "observation");
                double p = probability_token();
                for (int a : as)
                    for (int s2 : s2s)
                        for (int z : zs) o_entry(a, s2, z) = p;
                return;
            }
            if (!at_end() && peek().text == "uniform") {
                next();
                for (int a : as)
                    for (int s2 : s2s)
                        for (std::size_t z = 0; z < observations_.size(); ++z)
                            o_entry(a, s2, static_cast<int>(z)) =
                                1.0 / static_cast<double>(observations_.size());
                return;
            }
            std::vector<double> row = probability_row(observations_.size());
            for (int a : as)
                for (int s2 : s2s)
                    for (std::size_t z = 0; z < observations_.size(); ++z)
                        o_entry(a, s2, static_cast<int>(z)) = row[z];
            return;
        }
        if (!at_end() && peek().text == "uniform") {
            next();
            for (int a : as)
                for (std::size_t s2 = 0; s2 < states_.size(); ++s2)
                    for (std::size_t z = 0; z < observations_.size(); ++z)
                        o_entry(a, static_cast<int>(s2), static_cast<int>(z)) =
                            1.0 / static_cast<double>(observations_.size());
            return;
        }
        for (std::size_t s2 = 0; s2 < states_.size(); ++s2) {
            std::vector<double> row = probability_row(observations_.size());
            for (int a : as)
                for (std::size_t z = 0; z < observations_.size(); ++z)
                    o_entry(a, static_cast<int>(s2), static_cast<int>(z)) = row[z];
        }
    }

    // R: a : s [: s' [: z]]  with value / row / matrix bodies.
    void reward_directive() {
        any_reward_ = true;
        std::vector<int> as = resolve(actions_, "action");
        expect_colon("R: action");
        std::vector<int> ss = resolve(states_, "state");
        if (!at_end() && peek().text == ":") {
            next();
            std::vector<int> s2s = resolve(states_, "state");
            if (!at_end() && peek().text == ":") {
                next();
                std::vector<int> zs = resolve(observations_, "observation");
                double v = number_token();
                for (int a : as)
                    for (int s : ss)
                        for (int s2 : s2s)
                            for (int z : zs) r_entry(a, s, s2, z) = v;
                return;
            }
            for (int row = 0; row < static_cast<int>(observations_.size()); ++row) {
                double v = number_token();
                for (int a : as)
                    for (int s : ss)
                        for (int s2 : s2s) r_entry(a, s, s2, row) = v;
            }
            return;
        }
        for (std::size_t s2 = 0; s2 < states_.size(); ++s2) {
            for (std::size_t z = 0; z < observations_.size(); ++z) {
                double v = number_token();
                for (int a : as)
                    for (int s : ss) r_entry(a, s, static_cast<int>(s2), static_cast<int>(z)) = v;
            }
        }
    }

    double probability_token() {
        int line = here();
        double p = number_token();
        if (p < 0.0 || p > 1.0 + 1e-9) fail(line, "probability out of [0, 1]");
        return p;
    }

    std::vector<double> probability_row(std::size_t n) {
        std::vector<double> row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = probability_token();
        return row;
    }

    void finish() {
        bool fatal = false;
        for (const auto& d : diagnostics_)
            fatal = fatal || d.severity == ParseDiagnostic::Severity::Error;

        if (discount_ < 0.0 && !fatal) {
            error(1, "missing discount: directive");
            fatal = true;
        } else if (discount_ >= 0.0 && (discount_ <= 0.0 || discount_ >= 1.0)) {
            error(discount_line_, "discount must lie strictly between 0 and 1");
            fatal = true;
        }
        if (!fatal && (states_.empty() || actions_.empty() || observations_.empty())) {
            error(1, "missing states:, actions: or observations: directive");
            fatal = true;
        }
        if (!fatal && transition_.empty()) {
            error(1, "no T:, O: or R: directives found");
            fatal = true;
        }
        if (fatal) return;

        const int S = static_cast<int>(states_.size());
        const int A = static_cast<int>(actions_.size());
        const int Z = static_cast<int>(observations_.size());

        // Validate stochasticity at parse tolerance, then normalize rows
        // exactly so the model invariants hold at solver tolerance.
        for (int s = 0; s < S; ++s) {
            for (int a = 0; a < A; ++a) {
                double sum = 0.0;
                for (int s2 = 0; s2 < S; ++s2) sum += t_entry(a, s, s2);
                if (std::abs(sum - 1.0) > kRowSumTolerance) {
                    error(1, "transition row for (s=" + states_[static_cast<std::size_t>(s)] +
                                 ", a=" + actions_[static_cast<std::size_t>(a)] + ") sums to " +
                                 std::to_string(sum));
                    fatal = true;
                } else {
                    for (int s2 = 0; s2 < S; ++s2) t_entry(a, s, s2) /= sum;
                }
            }
        }
        for (int a = 0; a < A; ++a) {
            for (int s2 = 0; s2 < S; ++s2) {
                double sum = 0.0;
                for (int z = 0; z < Z; ++z) sum += o_entry(a, s2, z);
                if (std::abs(sum - 1.0) > kRowSumTolerance) {
                    error(1, "observation row for (s'=" + states_[static_cast<std::size_t>(s2)] +
                                 ", a=" + actions_[static_cast<std::size_t>(a)] + ") sums to " +
                                 std::to_string(sum));
                    fatal = true;
                } else {
                    for (int z = 0; z < Z; ++z) o_entry(a, s2, z) /= sum;
                }
            }
        }
        if (fatal) return;

        if (cost_values_)
            warning(values_line_, "values: cost — rewards negated on load");

        // Fold R(a,s,s',z) into the expected immediate reward R(s,a).
        std::vector<double> reward(static_cast<std::size_t>(S) * A, 0.0);
        const double sign = cost_values_ ? -1.0 : 1.0;
        for (int s = 0; s < S; ++s) {
            for (int a = 0; a < A; ++a) {
                double expected = 0.0;
                for (int s2 = 0; s2 < S; ++s2) {
                    double t = t_entry(a, s, s2);
                    if (t == 0.0) continue;
                    double inner = 0.0;
                    for (int z = 0; z < Z; ++z) inner += o_entry(a, s2, z) * r_entry(a, s, s2, z);
                    expected += t * inner;
                }
                reward[static_cast<std::size_t>(s) * A + a] = sign * expected;
            }
        }

        std::optional<BeliefState> start;
        if (start_) start = BeliefState(std::move(*start_));
        try {
            pomdp_.emplace(S, A, Z, std::move(transition_), std::move(observation_),
                           std::move(reward), discount_, std::move(start), std::move(states_),
                           std::move(actions_), std::move(observations_));
        } catch (const std::exception& ex) {
            error(1, std::string("model validation failed: ") + ex.what());
        }
    }
};

}  // namespace

std::string ParseResult::message() const {
    std::ostringstream out;
    for (const auto& d : diagnostics) {
        out << "line " << d.line << ": "
            << (d.severity == ParseDiagnostic::Severity::Error ? "error" : "warning") << ": "
            << d.message << "\n";
    }
    return out.str();
}

ParseResult parse_pomdp(std::string_view text) { return Parser(text).run(); }

ParseResult load_pomdp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ParseResult result;
        result.diagnostics.push_back(
            {1, "cannot open file: " + path, ParseDiagnostic::Severity::Error});
        return result;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_pomdp(buffer.str());
}

namespace {

void print_number(std::ostringstream& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << buf;
}

bool usable_names(const std::vector<std::string>& names) {
    for (const auto& n : names) {
        if (n.empty() || to_number(n)) return false;
        for (char c : n)
            if (std::isspace(static_cast<unsigned char>(c)) || c == ':' || c == '#' || c == '*')
                return false;
    }
    return true;
}

void print_dimension(std::ostringstream& out, const char* directive,
                     const std::vector<std::string>& names) {
    out << directive << ": ";
    if (usable_names(names)) {
        for (std::size_t i = 0; i < names.size(); ++i) out << (i ? " " : "") << names[i];
    } else {
        out << names.size();
    }
    out << "\n";
}

}  // namespace

std::string to_pomdp_format(const Pomdp& p) {
    std::ostringstream out;
    out << "discount: ";
    print_number(out, p.discount());
    out << "\nvalues: reward\n";
    print_dimension(out, "states", p.state_names());
    print_dimension(out, "actions", p.action_names());
    print_dimension(out, "observations", p.observation_names());
    if (p.has_explicit_start()) {
        out << "start:";
        for (int s = 0; s < p.num_states(); ++s) {
            out << " ";
            print_number(out, p.start_belief()[s]);
        }
        out << "\n";
    }
    out << "\n";
    for (int a = 0; a < p.num_actions(); ++a) {
        out << "T: " << a << "\n";
        for (int s = 0; s < p.num_states(); ++s) {
            for (int s2 = 0; s2 < p.num_states(); ++s2) {
                if (s2) out << " ";
                print_number(out, p.transition(s, a, s2));
            }
            out << "\n";
        }
    }
    out << "\n";
    for (int a = 0; a < p.num_actions(); ++a) {
        out << "O: " << a << "\n";
        for (int s2 = 0; s2 < p.num_states(); ++s2) {
            for (int z = 0; z < p.num_observations(); ++z) {
                if (z) out << " ";
                print_number(out, p.observation(a, s2, z));
            }
            out << "\n";
        }
    }
    out << "\n";
    for (int a = 0; a < p.num_actions(); ++a) {
        for (int s = 0; s < p.num_states(); ++s) {
            double r = p.reward(s, a);
            if (r == 0.0) continue;
            out << "R: " << a << " : " << s << " : * : * ";
            print_number(out, r);
            out << "\n";
        }
    }
    return out.str();
}

namespace {

// 53-bit uniform in [0, 1); avoids std::uniform_real_distribution so the
// stream is identical across standard library implementations.
double next_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> random_stochastic_row(std::mt19937_64& rng, int n) {
    std::vector<double> row(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (double& v : row) {
        // Exponential draws normalize to a flat Dirichlet sample.
        v = -std::log(1.0 - next_uniform(rng)) + 1e-9;
        sum += v;
    }
    for (double& v : row) v /= sum;
    return row;
}

}  // namespace

Pomdp generate_random_pomdp(int num_states, int num_actions, int num_observations,
                            double discount, std::uint64_t seed) {
    if (num_states < 1 || num_actions < 1 || num_observations < 1)
        throw std::invalid_argument("POMDP dimensions must be positive");
    if (discount <= 0.0 || discount >= 1.0)
        throw std::invalid_argument("discount must lie in (0, 1)");

    std::mt19937_64 rng(seed);
    const auto S = static_cast<std::size_t>(num_states);
    const auto A = static_cast<std::size_t>(num_actions);
    const auto Z = static_cast<std::size_t>(num_observations);

    std::vector<double> transition(S * A * S);
    for (int s = 0; s < num_states; ++s) {
        for (int a = 0; a < num_actions; ++a) {
            auto row = random_stochastic_row(rng, num_states);
            for (int s2 = 0; s2 < num_states; ++s2)
                transition[(static_cast<std::size_t>(s) * A + a) * S + s2] =
                    row[static_cast<std::size_t>(s2)];
        }
    }
    std::vector<double> observation(A * S * Z);
    for (int a = 0; a < num_actions; ++a) {
        for (int s2 = 0; s2 < num_states; ++s2) {
            auto row = random_stochastic_row(rng, num_observations);
            for (int z = 0; z < num_observations; ++z)
                observation[(static_cast<std::size_t>(a) * S + s2) * Z + z] =
                    row[static_cast<std::size_t>(z)];
        }
    }
    std::vector<double> reward(S * A);
    for (double& r : reward) r = 2.0 * next_uniform(rng) - 1.0;

    return Pomdp(num_states, num_actions, num_observations, std::move(transition),
                 std::move(observation), std::move(reward), discount);
}

}  // namespace sbpi
