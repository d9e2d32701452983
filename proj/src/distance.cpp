#include "dsc/distance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <cmath>
#include <thread>

#include "dsc/error.hpp"

namespace dsc {

namespace {

using Clock = std::chrono::steady_clock;

// Symbol-level arithmetic; symbols are the base-p encodings in [0, q).
struct Tables {
    int q = 0;
    bool xor_add = false;
    std::vector<std::uint8_t> add, mul, negdiv, neg;
    const GaloisField* f = nullptr;

    explicit Tables(const GaloisField& F) : q(F.q()), xor_add(F.even()), f(&F) {
        if (q > 256) throw StructuralError("distance kernels support q <= 256");
        add.resize(q * q);
        mul.resize(q * q);
        negdiv.resize(q * q);
        neg.resize(q);
        for (int a = 0; a < q; ++a) {
            int la = F.from_symbol(a);
            neg[a] = static_cast<std::uint8_t>(F.to_symbol(F.neg(la)));
            for (int b = 0; b < q; ++b) {
                int lb = F.from_symbol(b);
                add[a * q + b] = static_cast<std::uint8_t>(F.to_symbol(F.add(la, lb)));
                mul[a * q + b] = static_cast<std::uint8_t>(F.to_symbol(F.mul(la, lb)));
                negdiv[a * q + b] =
                    b == 0 ? 0 : static_cast<std::uint8_t>(F.to_symbol(F.neg(F.div(la, lb))));
            }
        }
    }
    std::uint8_t plus(std::uint8_t a, std::uint8_t b) const {
        return xor_add ? static_cast<std::uint8_t>(a ^ b) : add[a * q + b];
    }
    std::uint8_t one() const { return static_cast<std::uint8_t>(f->to_symbol(0)); }
};

struct InfoSet {
    std::vector<int> cols;
    int rho = 0;
    LinearCodeMatrix gen;            // k x n, identity on cols in the first rho rows
    std::vector<int> outside;        // columns not in the set
    std::vector<std::uint8_t> A;     // k x outside.size() symbols
    int width = 0;
};

// Gaussian elimination using pivots only from allowed columns; returns the
// transformed k-row matrix and the pivot columns (pivot rows come first).
LinearCodeMatrix reduce_on(const LinearCodeMatrix& m, const std::vector<int>& allowed, std::vector<int>& piv) {
    const auto& F = *m.field();
    LinearCodeMatrix a = m;
    int k = a.rows(), n = a.cols();
    int rank = 0;
    piv.clear();
    for (int c : allowed) {
        if (rank == k) break;
        int sel = -1;
        for (int r = rank; r < k; ++r)
            if (a.at(r, c) >= 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != rank)
            for (int j = 0; j < n; ++j) {
                int t = a.at(sel, j);
                a.set(sel, j, a.at(rank, j));
                a.set(rank, j, t);
            }
        int iv = F.inv(a.at(rank, c));
        for (int j = 0; j < n; ++j) a.set(rank, j, F.mul(a.at(rank, j), iv));
        for (int r = 0; r < k; ++r) {
            if (r == rank || a.at(r, c) < 0) continue;
            int factor = F.neg(a.at(r, c));
            for (int j = 0; j < n; ++j)
                if (a.at(rank, j) >= 0) a.set(r, j, F.add(a.at(r, j), F.mul(factor, a.at(rank, j))));
        }
        piv.push_back(c);
        ++rank;
    }
    return a;
}

std::vector<InfoSet> information_sets(const LinearCodeMatrix& g, const Tables& T, int max_sets) {
    int n = g.cols();
    std::vector<char> used(n, 0);
    std::vector<InfoSet> sets;
    while (static_cast<int>(sets.size()) < max_sets) {
        std::vector<int> allowed;
        for (int c = 0; c < n; ++c)
            if (!used[c]) allowed.push_back(c);
        if (allowed.empty()) break;
        InfoSet s;
        s.gen = reduce_on(g, allowed, s.cols);
        s.rho = static_cast<int>(s.cols.size());
        if (s.rho == 0) break;
        std::vector<char> in(n, 0);
        for (int c : s.cols) {
            used[c] = 1;
            in[c] = 1;
        }
        for (int c = 0; c < n; ++c)
            if (!in[c]) s.outside.push_back(c);
        s.width = static_cast<int>(s.outside.size());
        s.A.resize(static_cast<std::size_t>(g.rows()) * s.width);
        for (int r = 0; r < g.rows(); ++r)
            for (int j = 0; j < s.width; ++j)
                s.A[static_cast<std::size_t>(r) * s.width + j] =
                    static_cast<std::uint8_t>(T.f->to_symbol(s.gen.at(r, s.outside[j])));
        sets.push_back(std::move(s));
    }
    return sets;
}

double binom(int n, int r) {
    if (r < 0 || r > n) return 0;
    double v = 1;
    for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return std::round(v);
}

double level_cost(int k, int w, int q) { return binom(k, w) * std::pow(q - 1.0, w - 1); }

struct Best {
    int weight = INT_MAX;
    std::vector<int> rows;               // message support
    std::vector<std::uint8_t> coefs;     // symbols
};

// Enumerates all messages of Hamming weight exactly w (first coefficient 1)
// through one information set.
class LevelRunner {
public:
    LevelRunner(const InfoSet& s, const Tables& T, int k, int w, std::atomic<bool>& abort,
                Clock::time_point deadline, bool timed)
        : s_(s), T_(T), k_(k), w_(w), abort_(abort), deadline_(deadline), timed_(timed) {
        prefix_.assign(w, std::vector<std::uint8_t>(s.width, 0));
        head_in_.assign(w, 0);
        idx_.assign(w, 0);
        coef_.assign(w, 0);
        kills_.assign(T.q, 0);
    }

    // Items fix the first min(2, w-1) head rows.
    static std::vector<std::vector<int>> items(int k, int w) {
        std::vector<std::vector<int>> out;
        int fixed = std::min(2, w - 1);
        if (fixed == 0) {
            out.push_back({});
        } else if (fixed == 1) {
            for (int a = 0; a <= k - w; ++a) out.push_back({a});
        } else {
            for (int a = 0; a <= k - w; ++a)
                for (int b = a + 1; b <= k - w + 1; ++b) out.push_back({a, b});
        }
        return out;
    }

    void run(const std::vector<int>& item) {
        if (w_ == 1) {
            single();
            return;
        }
        item_ = &item;
        head(0, 0);
    }

    Best best;
    std::uint64_t work = 0;

private:
    void single() {
        for (int t = 0; t < k_; ++t) {
            const std::uint8_t* a = &s_.A[static_cast<std::size_t>(t) * s_.width];
            int wt = t < s_.rho;
            for (int j = 0; j < s_.width; ++j) wt += a[j] != 0;
            ++work;
            if (wt < best.weight) {
                best.weight = wt;
                best.rows = {t};
                best.coefs = {T_.one()};
            }
        }
    }

    void head(int depth, int start) {
        if (depth == w_ - 1) {
            tails(start);
            return;
        }
        int lo = start, hi = k_ - (w_ - depth);
        if (depth < static_cast<int>(item_->size())) lo = hi = (*item_)[depth];
        for (int s = lo; s <= hi; ++s) {
            if (abort_.load(std::memory_order_relaxed)) return;
            idx_[depth] = s;
            const std::uint8_t* a = &s_.A[static_cast<std::size_t>(s) * s_.width];
            int c_lo = depth == 0 ? T_.one() : 1, c_hi = depth == 0 ? T_.one() : T_.q - 1;
            for (int c = c_lo; c <= c_hi; ++c) {
                coef_[depth] = static_cast<std::uint8_t>(c);
                const std::uint8_t* mrow = &T_.mul[c * T_.q];
                const std::uint8_t* prev = prefix_[depth].data();
                std::uint8_t* next = prefix_[depth + 1].data();
                for (int j = 0; j < s_.width; ++j) next[j] = T_.plus(prev[j], mrow[a[j]]);
                head_in_[depth + 1] = head_in_[depth] + (s < s_.rho);
                head(depth + 1, s + 1);
            }
        }
    }

    void tails(int start) {
        const std::uint8_t* P = prefix_[w_ - 1].data();
        const int q = T_.q, width = s_.width;
        for (int t = start; t < k_; ++t) {
            const std::uint8_t* a = &s_.A[static_cast<std::size_t>(t) * width];
            int nz = 0, cand = 0, maxk = 0;
            std::uint8_t bestc = T_.one();
            for (int j = 0; j < width; ++j) {
                std::uint8_t p = P[j], x = a[j];
                if (!x) {
                    nz += p != 0;
                } else {
                    ++cand;
                    if (p) {
                        std::uint8_t kc = T_.negdiv[p * q + x];
                        int v = ++kills_[kc];
                        if (v > maxk) {
                            maxk = v;
                            bestc = kc;
                        }
                    }
                }
            }
            for (int j = 0; j < width; ++j)
                if (a[j] && P[j]) kills_[T_.negdiv[P[j] * q + a[j]]] = 0;
            work += static_cast<std::uint64_t>(q - 1);
            int wt = head_in_[w_ - 1] + (t < s_.rho) + nz + cand - maxk;
            if (wt < best.weight) {
                best.weight = wt;
                best.rows.assign(idx_.begin(), idx_.begin() + (w_ - 1));
                best.rows.push_back(t);
                best.coefs.assign(coef_.begin(), coef_.begin() + (w_ - 1));
                best.coefs.push_back(bestc);
            }
            if (timed_ && (++ticks_ & 0xFFFF) == 0 && Clock::now() > deadline_) {
                abort_.store(true);
                return;
            }
        }
    }

    const InfoSet& s_;
    const Tables& T_;
    int k_, w_;
    std::atomic<bool>& abort_;
    Clock::time_point deadline_;
    bool timed_;
    const std::vector<int>* item_ = nullptr;
    std::vector<std::vector<std::uint8_t>> prefix_;
    std::vector<int> head_in_;
    std::vector<int> idx_;
    std::vector<std::uint8_t> coef_;
    std::vector<int> kills_;
    std::uint64_t ticks_ = 0;
};

struct LevelOutcome {
    Best best;
    std::uint64_t work = 0;
    bool aborted = false;
};

LevelOutcome run_level(const InfoSet& s, const Tables& T, int k, int w, unsigned workers,
                       Clock::time_point deadline, bool timed) {
    auto items = LevelRunner::items(k, w);
    std::vector<Best> bests(items.size());
    std::vector<std::uint64_t> works(items.size(), 0);
    std::atomic<bool> abort{false};
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= items.size() || abort.load()) return;
            LevelRunner r(s, T, k, w, abort, deadline, timed);
            r.run(items[i]);
            bests[i] = std::move(r.best);
            works[i] = r.work;
        }
    };
    unsigned nw = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(items.size())));
    if (nw == 1) {
        worker();
    } else {
        std::vector<std::thread> th;
        for (unsigned i = 0; i < nw; ++i) th.emplace_back(worker);
        for (auto& t : th) t.join();
    }
    LevelOutcome out;
    out.aborted = abort.load();
    for (std::size_t i = 0; i < items.size(); ++i) {
        out.work += works[i];
        if (bests[i].weight < out.best.weight) out.best = std::move(bests[i]);
    }
    return out;
}

std::vector<int> message_codeword(const InfoSet& s, const Tables& T, const Best& b) {
    std::vector<int> msg(s.gen.rows(), GaloisField::ZERO);
    for (std::size_t i = 0; i < b.rows.size(); ++i) msg[b.rows[i]] = T.f->from_symbol(b.coefs[i]);
    return s.gen.encode(msg);
}

unsigned resolve_workers(unsigned w) {
    return w ? w : std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

DistanceResult min_distance_exhaustive(const LinearCodeMatrix& m, double budget) {
    DistanceResult res;
    res.n = m.cols();
    LinearCodeMatrix g = m.rref();
    res.k = g.rows();
    res.rank_reduced = res.k < m.rows();
    if (res.k == 0) {
        res.empty = true;
        res.exact = true;
        res.stop_reason = "no nonzero codeword";
        return res;
    }
    const auto& F = *m.field();
    double need = std::pow(static_cast<double>(F.q()), res.k);
    if (need > budget)
        throw BudgetExceeded("exhaustive distance needs q^k = " + std::to_string(static_cast<long long>(need)) +
                                 " messages, budget is " + std::to_string(static_cast<long long>(budget)),
                             need);
    Tables T(F);
    int k = res.k, n = res.n, q = F.q();
    std::vector<std::vector<std::uint8_t>> rows(k, std::vector<std::uint8_t>(n));
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < n; ++c) rows[r][c] = static_cast<std::uint8_t>(F.to_symbol(g.at(r, c)));
    int best = INT_MAX;
    std::vector<std::uint8_t> best_word;
    std::vector<std::uint8_t> word(n);
    std::vector<int> digit(k);
    for (int lead = 0; lead < k; ++lead) {
        word = rows[lead];
        std::fill(digit.begin(), digit.end(), 0);
        while (true) {
            int wt = 0;
            for (int c = 0; c < n; ++c) wt += word[c] != 0;
            ++res.work;
            if (wt < best) {
                best = wt;
                best_word = word;
            }
            // odometer over positions lead+1..k-1
            int j = lead + 1;
            for (; j < k; ++j) {
                int old = digit[j];
                int nxt = old + 1 == q ? 0 : old + 1;
                std::uint8_t delta = T.add[nxt * q + T.neg[old]];
                const std::uint8_t* mrow = &T.mul[delta * q];
                for (int c = 0; c < n; ++c) word[c] = T.plus(word[c], mrow[rows[j][c]]);
                digit[j] = nxt;
                if (nxt != 0) break;
            }
            if (j == k) break;
        }
    }
    res.lower = res.upper = best;
    res.exact = true;
    res.level = k;
    res.witness.resize(n);
    for (int c = 0; c < n; ++c) res.witness[c] = F.from_symbol(best_word[c]);
    res.stop_reason = "exhausted";
    return res;
}

DistanceResult min_distance_bz(const LinearCodeMatrix& m, const DistanceOptions& opt) {
    DistanceResult res;
    res.n = m.cols();
    LinearCodeMatrix g = m.rref();
    res.k = g.rows();
    res.rank_reduced = res.k < m.rows();
    if (res.k == 0) {
        res.empty = true;
        res.exact = true;
        res.stop_reason = "no nonzero codeword";
        return res;
    }
    const auto& F = *m.field();
    Tables T(F);
    const int k = res.k, q = F.q();
    auto sets = information_sets(g, T, res.n);
    for (const auto& s : sets) res.set_ranks.push_back(s.rho);
    unsigned workers = resolve_workers(opt.workers);
    bool timed = opt.budget_secs > 0;
    auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(timed ? opt.budget_secs : 0));

    std::vector<int> done(sets.size(), 0);
    auto lower_bound = [&]() {
        int lb = 0;
        for (std::size_t j = 0; j < sets.size(); ++j) lb += std::max(0, done[j] + 1 - (k - sets[j].rho));
        return lb;
    };
    auto take = [&](const InfoSet& s, const Best& b) {
        if (b.weight < res.upper || res.witness.empty()) {
            res.upper = b.weight;
            res.witness = message_codeword(s, T, b);
        }
    };

    res.upper = res.n + 1;
    std::atomic<bool> never{false};
    {
        // The systematic rows give a starting witness at negligible cost.
        LevelRunner r(sets[0], T, k, 1, never, deadline, false);
        r.run({});
        res.work += r.work;
        take(sets[0], r.best);
    }
    res.stop_reason = "operation budget";
    bool finished = false;
    for (int w = 1; w <= k && !finished; ++w) {
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (w + 1 - (k - sets[j].rho) <= 0) continue;
            double cost = level_cost(k, w, q);
            if (static_cast<double>(res.work) + cost > opt.budget_ops) {
                res.stop_reason = "operation budget";
                finished = true;
                break;
            }
            auto out = run_level(sets[j], T, k, w, workers, deadline, timed);
            res.work += out.work;
            if (out.best.weight != INT_MAX) take(sets[j], out.best);
            if (out.aborted) {
                res.stop_reason = "time budget";
                finished = true;
                break;
            }
            done[j] = w;
            if (j == 0) res.level = w;
            if (lower_bound() >= res.upper) {
                res.exact = true;
                res.stop_reason = "bounds met";
                finished = true;
                break;
            }
        }
        if (!finished && done[0] == k) {
            res.exact = true;
            res.stop_reason = "exhausted";
            finished = true;
        }
    }
    res.lower = res.exact ? res.upper : std::min(lower_bound(), res.upper);
    if (res.exact) res.lower = res.upper;
    return res;
}

std::optional<int> distance_upper_bound(const LinearCodeMatrix& m, int max_message_weight) {
    LinearCodeMatrix g = m.rref();
    int k = g.rows();
    if (k == 0) return std::nullopt;
    Tables T(*m.field());
    auto sets = information_sets(g, T, 1);
    std::atomic<bool> never{false};
    int best = INT_MAX;
    for (int w = 1; w <= std::min(k, std::max(1, max_message_weight)); ++w) {
        for (const auto& item : LevelRunner::items(k, w)) {
            LevelRunner r(sets[0], T, k, w, never, Clock::now(), false);
            r.run(item);
            best = std::min(best, r.best.weight);
        }
    }
    return best;
}

bool verify_witness(const LinearCodeMatrix& m, const DistanceResult& r) {
    if (r.empty) return r.witness.empty();
    if (static_cast<int>(r.witness.size()) != m.cols()) return false;
    if (hamming_weight(r.witness) != r.upper) return false;
    return m.in_row_space(r.witness);
}

}  // namespace dsc
