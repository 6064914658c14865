#include <iomanip>
#include <set>
#include <sstream>
#include <tuple>

#include "cryptolint/corpus/corpus.hpp"

namespace cryptolint::corpus {

namespace {

double ratio(std::size_t num, std::size_t den) { return den == 0 ? 1.0 : static_cast<double>(num) / static_cast<double>(den); }

void add(RuleScore& into, const RuleScore& s) {
    into.true_positives += s.true_positives;
    into.false_negatives += s.false_negatives;
    into.false_positives += s.false_positives;
}

}  // namespace

double RuleScore::recall() const { return ratio(true_positives, true_positives + false_negatives); }
double RuleScore::precision() const { return ratio(true_positives, true_positives + false_positives); }

ScoreReport evaluate(const std::vector<findings::Finding>& findings, const std::vector<CorpusCase>& cases) {
    using Key = std::tuple<std::string, int, std::string>;
    ScoreReport report;
    std::set<std::string> corpus_files;
    std::set<Key> expected;
    for (const auto& c : cases) {
        report.per_rule[c.rule_id];
        for (const auto& f : c.files) corpus_files.insert(f.path);
        for (const auto& e : c.expected) expected.insert({e.file, e.line, e.rule_id});
    }

    std::set<Key> matched;
    for (const auto& f : findings) {
        if (!corpus_files.count(f.file)) continue;
        Key k{f.file, f.line, f.rule_id};
        if (expected.count(k)) {
            if (matched.insert(k).second) ++report.per_rule[f.rule_id].true_positives;
        } else {
            ++report.per_rule[f.rule_id].false_positives;
            report.spurious.push_back(f);
        }
    }
    for (const auto& [file, line, rule] : expected) {
        if (matched.count({file, line, rule})) continue;
        ++report.per_rule[rule].false_negatives;
        report.missed.push_back({file, line, rule});
    }
    for (const auto& [_, s] : report.per_rule) add(report.overall, s);
    return report;
}

std::string render_score(const ScoreReport& r) {
    std::ostringstream out;
    out << std::left << std::setw(8) << "Rule" << std::right << std::setw(5) << "TP" << std::setw(5) << "FN"
        << std::setw(5) << "FP" << std::setw(10) << "Recall" << std::setw(11) << "Precision" << '\n';
    auto row = [&](const std::string& name, const RuleScore& s) {
        out << std::left << std::setw(8) << name << std::right << std::setw(5) << s.true_positives << std::setw(5)
            << s.false_negatives << std::setw(5) << s.false_positives << std::fixed << std::setprecision(3)
            << std::setw(10) << s.recall() << std::setw(11) << s.precision() << '\n';
    };
    for (const auto& [rule, s] : r.per_rule) row("rule-" + rule, s);
    row("all", r.overall);
    for (const auto& m : r.missed) out << "missed: " << m.file << ':' << m.line << " rule-" << m.rule_id << '\n';
    for (const auto& f : r.spurious) {
        out << "spurious: " << f.file << ':' << f.line << " rule-" << f.rule_id << ' ' << f.message << '\n';
    }
    return out.str();
}

}  // namespace cryptolint::corpus
