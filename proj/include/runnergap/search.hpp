#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "runnergap/gap.hpp"
#include "runnergap/rational.hpp"
#include "runnergap/velocity.hpp"

namespace runnergap {

// Bounded verification run: scan every canonical tuple of n distinct
// velocities up to `bound` and compare each exact gap against `threshold`.
struct SearchSpec {
    enum class Mode { verify, extremisers };

    long long n = 1;
    long long bound = 1;
    Rational threshold;  // strict violations are delta < threshold; ties are extremisers
    Mode mode = Mode::verify;

    SearchSpec(long long n_, long long bound_, Rational threshold_, Mode mode_ = Mode::verify)
        : n(n_), bound(bound_), threshold(std::move(threshold_)), mode(mode_) {
        if (n < 1) throw std::invalid_argument("SearchSpec: n must be >= 1");
        if (bound < n) throw std::invalid_argument("SearchSpec: bound must be >= n");
        if (threshold <= Rational(0)) throw std::invalid_argument("SearchSpec: threshold must be positive");
    }

    static const char* mode_name(Mode m) { return m == Mode::verify ? "verify" : "extremisers"; }
};

struct Finding {
    std::string kind;  // "violation" or "extremiser"
    long long n = 0;
    VelocityTuple tuple;
    Rational delta;
    CirclePoint witness;

    std::string record() const {
        return "kind=" + kind + " n=" + std::to_string(n) + " tuple=" + tuple.str() +
               " delta=" + delta.str() + " witness=" + witness.str();
    }
};

// The variant union-bound improvement is asymptotic, so tuples beneath it
// are reported as findings instead of being asserted against.
struct VariantFinding {
    VelocityTuple tuple;
    Rational delta;
    Rational bound;

    std::string record() const {
        return "tuple=" + tuple.str() + " delta=" + delta.str() + " bound=" + bound.str();
    }
};

struct VerificationReport {
    long long n = 0;
    long long bound = 0;
    Rational threshold;
    SearchSpec::Mode mode = SearchSpec::Mode::verify;

    std::uint64_t tuples_examined = 0;
    std::uint64_t partitions_total = 0;
    std::uint64_t partitions_completed = 0;
    bool completed = false;
    std::pair<long long, long long> last_completed_partition{0, 0};

    std::vector<Finding> violations;
    std::vector<Finding> extremisers;
    std::optional<Rational> corpus_min_delta;
    std::vector<VelocityTuple> attaining;  // tuples attaining corpus_min_delta
    std::vector<VariantFinding> variant_findings;

    std::string str() const {
        std::ostringstream os;
        os << "mode=" << SearchSpec::mode_name(mode) << "\n";
        os << "n=" << n << "\n";
        os << "bound=" << bound << "\n";
        os << "threshold=" << threshold.str() << "\n";
        os << "tuples_examined=" << tuples_examined << "\n";
        os << "partitions=" << partitions_total << "\n";
        os << "partitions_completed=" << partitions_completed << "\n";
        os << "completed=" << (completed ? "true" : "false") << "\n";
        os << "violations=" << violations.size() << "\n";
        os << "extremisers=" << extremisers.size() << "\n";
        os << "corpus_min_delta=" << (corpus_min_delta ? corpus_min_delta->str() : "none") << "\n";
        for (const auto& t : attaining) os << "attaining=" << t.str() << "\n";
        os << "variant_findings=" << variant_findings.size() << "\n";
        for (const auto& f : violations) os << "finding " << f.record() << "\n";
        for (const auto& f : extremisers) os << "finding " << f.record() << "\n";
        for (const auto& f : variant_findings) os << "variant " << f.record() << "\n";
        return os.str();
    }
};

struct SearchOptions {
    unsigned workers = 1;
    std::string checkpoint_path;      // resume from and checkpoint to this file
    std::string results_path;         // line-delimited findings
    std::uint64_t max_partitions = 0; // stop (with a valid checkpoint) after this many; 0 = all
    std::ostream* progress = nullptr; // diagnostic stream, not part of the report
};

// Work units: tuples grouped by their first two coordinates (first one for
// n = 1).  Partition order is the enumeration order.
inline std::vector<std::pair<long long, long long>> search_partitions(long long n, long long bound) {
    if (n < 1 || bound < n) throw std::invalid_argument("search_partitions: need bound >= n >= 1");
    std::vector<std::pair<long long, long long>> out;
    if (n == 1) {
        for (long long v = 1; v <= bound; ++v) out.emplace_back(v, 0);
    } else {
        for (long long v1 = 1; v1 <= bound; ++v1)
            for (long long v2 = v1 + 1; v2 <= bound; ++v2) out.emplace_back(v1, v2);
    }
    return out;
}

namespace detail {

// Extends `prefix` to all strictly increasing gcd-one tuples of length n
// bounded by `bound`, in lexicographic order.
inline void extend_canonical(std::vector<long long>& prefix, long long running_gcd, long long n,
                             long long bound,
                             const std::function<void(const std::vector<long long>&)>& visit) {
    if (static_cast<long long>(prefix.size()) == n) {
        if (running_gcd == 1) visit(prefix);
        return;
    }
    long long remaining = n - static_cast<long long>(prefix.size());
    long long lo = prefix.empty() ? 1 : prefix.back() + 1;
    for (long long v = lo; v + remaining - 1 <= bound; ++v) {
        prefix.push_back(v);
        extend_canonical(prefix, std::gcd(running_gcd, v), n, bound, visit);
        prefix.pop_back();
    }
}

inline VelocityTuple to_tuple(const std::vector<long long>& v) {
    return VelocityTuple(std::vector<Int>(v.begin(), v.end()));
}

}  // namespace detail

// Streams the canonical tuples 0 < v_1 < ... < v_n <= bound with overall
// gcd 1, each exactly once, in lexicographic order.
inline void enumerate_canonical(long long n, long long bound,
                                const std::function<void(const VelocityTuple&)>& visit) {
    if (n < 1 || bound < n) throw std::invalid_argument("enumerate_canonical: need bound >= n >= 1");
    std::vector<long long> prefix;
    detail::extend_canonical(prefix, 0, n, bound,
                             [&](const std::vector<long long>& v) { visit(detail::to_tuple(v)); });
}

inline std::vector<VelocityTuple> collect_canonical(long long n, long long bound) {
    std::vector<VelocityTuple> out;
    enumerate_canonical(n, bound, [&](const VelocityTuple& t) { out.push_back(t); });
    return out;
}

namespace detail {

struct PartitionResult {
    std::uint64_t tuples = 0;
    std::vector<Finding> violations;
    std::vector<Finding> extremisers;
    std::optional<Rational> local_min;
    std::vector<VelocityTuple> attaining;
    std::vector<VariantFinding> variant;
};

inline PartitionResult process_partition(const SearchSpec& spec,
                                         std::pair<long long, long long> part) {
    PartitionResult res;
    std::vector<long long> prefix;
    prefix.push_back(part.first);
    long long g = part.first;
    if (spec.n >= 2) {
        prefix.push_back(part.second);
        g = std::gcd(g, part.second);
    }
    extend_canonical(prefix, g, spec.n, spec.bound, [&](const std::vector<long long>& raw) {
        VelocityTuple tuple = to_tuple(raw);
        GapResult gap = compute_delta(tuple);
        ++res.tuples;
        if (gap.delta < spec.threshold)
            res.violations.push_back(Finding{"violation", spec.n, tuple, gap.delta, gap.witness});
        else if (gap.delta == spec.threshold)
            res.extremisers.push_back(Finding{"extremiser", spec.n, tuple, gap.delta, gap.witness});
        if (!res.local_min || gap.delta < *res.local_min) {
            res.local_min = gap.delta;
            res.attaining.clear();
            res.attaining.push_back(tuple);
        } else if (gap.delta == *res.local_min) {
            res.attaining.push_back(tuple);
        }
        // delta >= 1 / (2 (n - sum_{i>=2} 1/v_i)) holds asymptotically.
        Rational inv_sum(0);
        for (std::size_t i = 1; i < raw.size(); ++i) inv_sum += Rational(1, raw[i]);
        Rational variant_bound = Rational(1) / (Rational(2) * (Rational(spec.n) - inv_sum));
        if (gap.delta < variant_bound)
            res.variant.push_back(VariantFinding{tuple, gap.delta, variant_bound});
    });
    return res;
}

inline std::string tuple_field(const std::string& record, const std::string& key) {
    auto pos = record.find(key + "=");
    if (pos == std::string::npos)
        throw std::invalid_argument("checkpoint: missing field " + key + " in: " + record);
    pos += key.size() + 1;
    auto end = record.find(' ', pos);
    return record.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
}

inline VelocityTuple parse_tuple(const std::string& csv) {
    std::vector<Int> v;
    std::string cur;
    std::istringstream is(csv);
    while (std::getline(is, cur, ',')) v.emplace_back(cur);
    return VelocityTuple(std::move(v));
}

inline Finding parse_finding(const std::string& record) {
    Finding f;
    f.kind = tuple_field(record, "kind");
    f.n = std::stoll(tuple_field(record, "n"));
    f.tuple = parse_tuple(tuple_field(record, "tuple"));
    f.delta = Rational::parse(tuple_field(record, "delta"));
    f.witness = CirclePoint(Rational::parse(tuple_field(record, "witness")));
    return f;
}

inline VariantFinding parse_variant(const std::string& record) {
    VariantFinding f;
    f.tuple = parse_tuple(tuple_field(record, "tuple"));
    f.delta = Rational::parse(tuple_field(record, "delta"));
    f.bound = Rational::parse(tuple_field(record, "bound"));
    return f;
}

}  // namespace detail

// Checkpoints carry everything the final report needs, so a killed run
// resumed from the last record reproduces the uninterrupted report and
// results file byte for byte.  Written atomically (temp file + rename).
struct Checkpoint {
    SearchSpec::Mode mode = SearchSpec::Mode::verify;
    long long n = 0;
    long long bound = 0;
    Rational threshold;
    std::uint64_t partitions_completed = 0;
    std::pair<long long, long long> last_completed_partition{0, 0};
    std::uint64_t tuples_examined = 0;
    std::optional<Rational> corpus_min_delta;
    std::vector<VelocityTuple> attaining;
    std::vector<Finding> violations;
    std::vector<Finding> extremisers;
    std::vector<VariantFinding> variant_findings;
    std::uint64_t results_bytes = 0;

    std::string str() const {
        std::ostringstream os;
        os << "format=runnergap-checkpoint-v1\n";
        os << "mode=" << SearchSpec::mode_name(mode) << "\n";
        os << "n=" << n << "\n";
        os << "bound=" << bound << "\n";
        os << "threshold=" << threshold.str() << "\n";
        os << "partitions_completed=" << partitions_completed << "\n";
        os << "last_completed_partition=" << last_completed_partition.first << ","
           << last_completed_partition.second << "\n";
        os << "tuples_examined=" << tuples_examined << "\n";
        os << "corpus_min_delta=" << (corpus_min_delta ? corpus_min_delta->str() : "none") << "\n";
        os << "results_bytes=" << results_bytes << "\n";
        for (const auto& t : attaining) os << "attaining=" << t.str() << "\n";
        for (const auto& f : violations) os << "finding " << f.record() << "\n";
        for (const auto& f : extremisers) os << "finding " << f.record() << "\n";
        for (const auto& f : variant_findings) os << "variant " << f.record() << "\n";
        return os.str();
    }

    static Checkpoint parse(std::istream& is) {
        Checkpoint cp;
        std::string line;
        bool saw_format = false;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            if (line.rfind("finding ", 0) == 0) {
                Finding f = detail::parse_finding(line.substr(8));
                (f.kind == "violation" ? cp.violations : cp.extremisers).push_back(std::move(f));
                continue;
            }
            if (line.rfind("variant ", 0) == 0) {
                cp.variant_findings.push_back(detail::parse_variant(line.substr(8)));
                continue;
            }
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("checkpoint: malformed line: " + line);
            std::string key = line.substr(0, eq), value = line.substr(eq + 1);
            if (key == "format") {
                if (value != "runnergap-checkpoint-v1")
                    throw std::invalid_argument("checkpoint: unknown format " + value);
                saw_format = true;
            } else if (key == "mode") {
                cp.mode = value == "verify" ? SearchSpec::Mode::verify : SearchSpec::Mode::extremisers;
            } else if (key == "n") {
                cp.n = std::stoll(value);
            } else if (key == "bound") {
                cp.bound = std::stoll(value);
            } else if (key == "threshold") {
                cp.threshold = Rational::parse(value);
            } else if (key == "partitions_completed") {
                cp.partitions_completed = std::stoull(value);
            } else if (key == "last_completed_partition") {
                auto comma = value.find(',');
                cp.last_completed_partition = {std::stoll(value.substr(0, comma)),
                                               std::stoll(value.substr(comma + 1))};
            } else if (key == "tuples_examined") {
                cp.tuples_examined = std::stoull(value);
            } else if (key == "corpus_min_delta") {
                if (value != "none") cp.corpus_min_delta = Rational::parse(value);
            } else if (key == "results_bytes") {
                cp.results_bytes = std::stoull(value);
            } else if (key == "attaining") {
                cp.attaining.push_back(detail::parse_tuple(value));
            } else {
                throw std::invalid_argument("checkpoint: unknown key " + key);
            }
        }
        if (!saw_format) throw std::invalid_argument("checkpoint: missing format line");
        return cp;
    }
};

namespace detail {

inline void write_checkpoint_atomic(const std::string& path, const Checkpoint& cp) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::trunc);
        if (!os) throw std::runtime_error("cannot write checkpoint " + tmp);
        os << cp.str();
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace detail

// Runs the bounded verification.  Partitions are processed by `workers`
// threads and merged strictly in partition order, so the report and the
// results file are independent of the worker count.
inline VerificationReport verify_bound(const SearchSpec& spec, const SearchOptions& opt = {}) {
    auto partitions = search_partitions(spec.n, spec.bound);

    VerificationReport rep;
    rep.n = spec.n;
    rep.bound = spec.bound;
    rep.threshold = spec.threshold;
    rep.mode = spec.mode;
    rep.partitions_total = partitions.size();

    std::uint64_t start_index = 0;
    std::uint64_t results_bytes = 0;

    if (!opt.checkpoint_path.empty() && std::filesystem::exists(opt.checkpoint_path)) {
        std::ifstream is(opt.checkpoint_path);
        Checkpoint cp = Checkpoint::parse(is);
        if (cp.mode != spec.mode || cp.n != spec.n || cp.bound != spec.bound ||
            cp.threshold != spec.threshold)
            throw std::invalid_argument("checkpoint does not match the requested run");
        start_index = cp.partitions_completed;
        rep.tuples_examined = cp.tuples_examined;
        rep.corpus_min_delta = cp.corpus_min_delta;
        rep.attaining = cp.attaining;
        rep.violations = cp.violations;
        rep.extremisers = cp.extremisers;
        rep.variant_findings = cp.variant_findings;
        rep.partitions_completed = cp.partitions_completed;
        rep.last_completed_partition = cp.last_completed_partition;
        results_bytes = cp.results_bytes;
        if (opt.progress)
            *opt.progress << "resuming after " << start_index << " of " << partitions.size()
                          << " partitions\n";
    }

    std::ofstream results;
    if (!opt.results_path.empty()) {
        // Records past the checkpointed byte count belong to partitions that
        // will be re-run; drop them before appending.
        if (start_index > 0) {
            if (!std::filesystem::exists(opt.results_path) &&
                results_bytes > 0)
                throw std::invalid_argument("results file named by the checkpoint is missing");
            if (std::filesystem::exists(opt.results_path)) {
                if (std::filesystem::file_size(opt.results_path) < results_bytes)
                    throw std::invalid_argument("results file shorter than checkpoint expects");
                std::filesystem::resize_file(opt.results_path, results_bytes);
            }
            results.open(opt.results_path, std::ios::app);
        } else {
            results.open(opt.results_path, std::ios::trunc);
            results_bytes = 0;
        }
        if (!results) throw std::runtime_error("cannot open results file " + opt.results_path);
    }

    const std::uint64_t total = partitions.size();
    std::uint64_t end_index = total;
    if (opt.max_partitions > 0)
        end_index = std::min<std::uint64_t>(total, start_index + opt.max_partitions);

    struct Slot {
        bool done = false;
        detail::PartitionResult res;
    };
    std::vector<Slot> slots(end_index - start_index);
    std::atomic<std::uint64_t> next{start_index};
    std::mutex mx;
    std::condition_variable cv;

    unsigned workers = std::max(1u, opt.workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                std::uint64_t i = next.fetch_add(1);
                if (i >= end_index) break;
                detail::PartitionResult res = detail::process_partition(spec, partitions[i]);
                {
                    std::lock_guard<std::mutex> lock(mx);
                    slots[i - start_index].res = std::move(res);
                    slots[i - start_index].done = true;
                }
                cv.notify_one();
            }
        });
    }

    auto merge = [&](std::uint64_t index, detail::PartitionResult& res) {
        rep.tuples_examined += res.tuples;
        for (auto& f : res.violations) {
            if (results.is_open()) {
                std::string line = f.record() + "\n";
                results << line;
                results_bytes += line.size();
            }
            rep.violations.push_back(std::move(f));
        }
        for (auto& f : res.extremisers) {
            if (results.is_open()) {
                std::string line = f.record() + "\n";
                results << line;
                results_bytes += line.size();
            }
            rep.extremisers.push_back(std::move(f));
        }
        for (auto& f : res.variant) rep.variant_findings.push_back(std::move(f));
        if (res.local_min) {
            if (!rep.corpus_min_delta || *res.local_min < *rep.corpus_min_delta) {
                rep.corpus_min_delta = res.local_min;
                rep.attaining = std::move(res.attaining);
            } else if (*res.local_min == *rep.corpus_min_delta) {
                for (auto& t : res.attaining) rep.attaining.push_back(std::move(t));
            }
        }
        rep.partitions_completed = index + 1;
        rep.last_completed_partition = partitions[index];
        if (results.is_open()) results.flush();
        if (!opt.checkpoint_path.empty()) {
            Checkpoint cp;
            cp.mode = spec.mode;
            cp.n = spec.n;
            cp.bound = spec.bound;
            cp.threshold = spec.threshold;
            cp.partitions_completed = rep.partitions_completed;
            cp.last_completed_partition = rep.last_completed_partition;
            cp.tuples_examined = rep.tuples_examined;
            cp.corpus_min_delta = rep.corpus_min_delta;
            cp.attaining = rep.attaining;
            cp.violations = rep.violations;
            cp.extremisers = rep.extremisers;
            cp.variant_findings = rep.variant_findings;
            cp.results_bytes = results_bytes;
            detail::write_checkpoint_atomic(opt.checkpoint_path, cp);
        }
        if (opt.progress && (index + 1) % 64 == 0)
            *opt.progress << "partition " << (index + 1) << "/" << total << "\n";
    };

    {
        std::unique_lock<std::mutex> lock(mx);
        for (std::uint64_t i = start_index; i < end_index; ++i) {
            cv.wait(lock, [&] { return slots[i - start_index].done; });
            detail::PartitionResult res = std::move(slots[i - start_index].res);
            lock.unlock();
            merge(i, res);
            lock.lock();
        }
    }
    for (auto& t : pool) t.join();

    rep.completed = rep.partitions_completed == total;
    return rep;
}

// All canonical tuples whose gap equals 1/(n+1) exactly.
inline std::vector<VelocityTuple> find_extremisers(long long n, long long bound,
                                                   const SearchOptions& opt = {}) {
    SearchSpec spec(n, bound, Rational(1, n + 1), SearchSpec::Mode::extremisers);
    VerificationReport rep = verify_bound(spec, opt);
    std::vector<VelocityTuple> out;
    out.reserve(rep.extremisers.size());
    for (const auto& f : rep.extremisers) out.push_back(f.tuple);
    return out;
}

}  // namespace runnergap
