// Exact double description: H <-> V conversion of rational polyhedral cones.
//
// The engine starts from the full space (lineality basis) and inserts
// halfspaces one at a time, maintaining one representative per extreme ray of
// the current cone plus the remaining lineality.  Adjacency of a positive and
// a negative ray uses the combinatorial test (no third ray's zero set contains
// the pair's common zero set), narrowed by an inverted tight-row index.
//
// Arithmetic runs on int64 with __int128 accumulators and conservative range
// checks; any overflow restarts the conversion on GMP integers.  Insertion
// order is dynamic: the next row minimizes the positive*negative sign-count
// product on a deterministic sample of the current rays.

#pragma once

#include <bit>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "hec/cone.hpp"
#include "hec/lp.hpp"
#include "hec/parallel.hpp"
#include "hec/rational.hpp"

namespace hec {

struct DDOverflow : std::exception {
    const char* what() const noexcept override { return "dd: int64 range exceeded"; }
};

struct DDOptions {
    std::size_t max_rays = 0;      // cap on intermediate ray count, 0 = unlimited
    int threads = 0;               // 0 = hardware default
    std::string checkpoint_path;   // when set, state is saved here each step
    bool force_bigint = false;     // skip the int64 fast path
    std::size_t sample_limit = 2048;  // rays sampled by the ordering heuristic
    std::function<void(std::size_t, std::size_t, std::size_t)> progress;  // step, total, rays
};

struct DDResult {
    std::vector<IVec> rays;
    std::vector<IVec> lines;
};

namespace dd_detail {

struct SmallPolicy {
    using Elem = std::int64_t;
    using Acc = __int128;
    static constexpr Elem kMaxEntry = Elem(1) << 30;

    static Elem from_int(const Int& v) {
        if (!v.fits_slong_p()) throw DDOverflow();
        long x = v.get_si();
        if (x > kMaxEntry || x < -kMaxEntry) throw DDOverflow();
        return x;
    }
    static Int to_int(Elem v) { return Int(long(v)); }
    static int sign(Acc a) { return a > 0 ? 1 : a < 0 ? -1 : 0; }
    static Acc gcd(Acc a, Acc b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) {
            Acc t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
    static Acc dot(const Elem* a, const Elem* b, int d) {
        Acc s = 0;
        for (int i = 0; i < d; ++i) s += Acc(a[i]) * b[i];
        return s;
    }
    // out = alpha*x + beta*y, content-normalized
    static void combine(Acc alpha, const Elem* x, Acc beta, const Elem* y, Elem* out, int d) {
        static thread_local std::vector<Acc> tmp;
        tmp.resize(d);
        Acc g = 0;
        for (int i = 0; i < d; ++i) {
            tmp[i] = alpha * Acc(x[i]) + beta * Acc(y[i]);
            if (tmp[i]) g = g ? gcd(g, tmp[i]) : (tmp[i] > 0 ? tmp[i] : -tmp[i]);
        }
        for (int i = 0; i < d; ++i) {
            Acc v = g > 1 ? tmp[i] / g : tmp[i];
            if (v > kMaxEntry || v < -kMaxEntry) throw DDOverflow();
            out[i] = Elem(v);
        }
    }
};

struct BigPolicy {
    using Elem = Int;
    using Acc = Int;

    static Elem from_int(const Int& v) { return v; }
    static Int to_int(const Elem& v) { return v; }
    static int sign(const Acc& a) { return sgn(a); }
    static Acc dot(const Elem* a, const Elem* b, int d) {
        Acc s = 0;
        for (int i = 0; i < d; ++i)
            if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
        return s;
    }
    static void combine(const Acc& alpha, const Elem* x, const Acc& beta, const Elem* y, Elem* out,
                        int d) {
        IVec tmp(d);
        for (int i = 0; i < d; ++i) tmp[i] = alpha * x[i] + beta * y[i];
        normalize_content(tmp);
        for (int i = 0; i < d; ++i) out[i] = tmp[i];
    }
};

using Word = std::uint64_t;

template <class P>
class Engine {
  public:
    using Elem = typename P::Elem;
    using Acc = typename P::Acc;

    Engine(const std::vector<IVec>& rows, int dim, const DDOptions& opt)
        : d_(dim), nrows_(rows.size()), opt_(opt) {
        threads_ = opt.threads > 0 ? opt.threads : default_threads();
        words_ = (nrows_ + 63) / 64;
        if (words_ == 0) words_ = 1;
        rows_.resize(nrows_ * d_);
        for (std::size_t r = 0; r < nrows_; ++r)
            for (int j = 0; j < d_; ++j) rows_[r * d_ + j] = P::from_int(rows[r][j]);
        pending_.resize(nrows_);
        for (std::size_t r = 0; r < nrows_; ++r) pending_[r] = int(r);
        for (int j = 0; j < d_; ++j) {
            std::vector<Elem> e(d_, Elem(0));
            e[j] = Elem(1);
            lin_.push_back(std::move(e));
        }
        input_hash_ = hash_rows(rows, dim);
    }

    static std::size_t hash_rows(const std::vector<IVec>& rows, int dim) {
        std::size_t h = std::hash<std::size_t>()(rows.size() * 1000003 + dim);
        for (const auto& r : rows)
            for (const auto& v : r) {
                h ^= std::hash<std::string>()(v.get_str()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            }
        return h;
    }

    DDResult run() {
        if (!opt_.checkpoint_path.empty()) try_load_checkpoint();
        while (!pending_.empty()) {
            int row = pick_next();
            insert(row);
            if (opt_.progress) opt_.progress(step_, nrows_, nrays_);
            if (!opt_.checkpoint_path.empty()) save_checkpoint();
            if (opt_.max_rays && nrays_ > opt_.max_rays) {
                throw ResourceLimitError("dd: intermediate ray cap exceeded (" +
                                         std::to_string(nrays_) + " rays)");
            }
        }
        DDResult res;
        res.rays.reserve(nrays_);
        for (std::size_t r = 0; r < nrays_; ++r) {
            IVec v(d_);
            for (int j = 0; j < d_; ++j) v[j] = P::to_int(coords_[r * d_ + j]);
            res.rays.push_back(std::move(v));
        }
        for (const auto& l : lin_) {
            IVec v(d_);
            for (int j = 0; j < d_; ++j) v[j] = P::to_int(l[j]);
            res.lines.push_back(std::move(v));
        }
        return res;
    }

  private:
    const Elem* row_ptr(int r) const { return &rows_[std::size_t(r) * d_]; }
    const Elem* ray_ptr(std::size_t r) const { return &coords_[r * d_]; }
    const Word* zset_ptr(std::size_t r) const { return &zsets_[r * words_]; }

    // Sign partition of current rays against a row; sampled when stride > 1.
    void count_signs(int row, std::size_t stride, std::size_t& pos, std::size_t& neg) const {
        pos = neg = 0;
        const Elem* rv = row_ptr(row);
        for (std::size_t r = 0; r < nrays_; r += stride) {
            int s = P::sign(P::dot(ray_ptr(r), rv, d_));
            if (s > 0) ++pos;
            if (s < 0) ++neg;
        }
    }

    int pick_next() {
        if (pending_.size() == 1) return take_pending(0);
        if (!lin_.empty()) {
            // prefer rows that eliminate a lineality direction
            for (std::size_t i = 0; i < pending_.size(); ++i)
                for (const auto& l : lin_)
                    if (P::sign(P::dot(l.data(), row_ptr(pending_[i]), d_)) != 0) return take_pending(i);
        }
        std::size_t stride = nrays_ > opt_.sample_limit ? nrays_ / opt_.sample_limit : 1;
        std::size_t best_i = 0;
        unsigned long long best_score = ~0ull;
        std::vector<unsigned long long> scores(pending_.size());
        parallel_chunks(pending_.size(), threads_, [&](std::size_t b, std::size_t e, int) {
            for (std::size_t i = b; i < e; ++i) {
                std::size_t pos, neg;
                count_signs(pending_[i], stride, pos, neg);
                scores[i] = (unsigned long long)(pos)*neg;
            }
        });
        for (std::size_t i = 0; i < pending_.size(); ++i)
            if (scores[i] < best_score) {
                best_score = scores[i];
                best_i = i;
            }
        return take_pending(best_i);
    }

    int take_pending(std::size_t i) {
        int row = pending_[i];
        pending_.erase(pending_.begin() + i);
        return row;
    }

    void insert(int row) {
        const Elem* rv = row_ptr(row);
        // lineality pivot: some line has nonzero dot
        if (!lin_.empty()) {
            int hit = -1;
            for (std::size_t i = 0; i < lin_.size(); ++i)
                if (P::sign(P::dot(lin_[i].data(), rv, d_)) != 0) {
                    hit = int(i);
                    break;
                }
            if (hit >= 0) {
                pivot_lineality(row, hit);
                return;
            }
        }
        partition_insert(row);
    }

    void pivot_lineality(int row, int hit) {
        const Elem* rv = row_ptr(row);
        std::vector<Elem> b = lin_[hit];
        lin_.erase(lin_.begin() + hit);
        Acc db = P::dot(b.data(), rv, d_);
        if (P::sign(db) < 0) {
            for (auto& v : b) v = -v;
            db = -db;
        }
        // make remaining lines orthogonal to the row
        for (auto& l : lin_) {
            Acc dl = P::dot(l.data(), rv, d_);
            if (P::sign(dl) != 0) P::combine(db, l.data(), -dl, b.data(), l.data(), d_);
        }
        // project rays into the row's hyperplane along b
        std::vector<Elem> nc(coords_.size() + std::size_t(d_));
        std::vector<Word> nz(zsets_.size() + words_, 0);
        parallel_chunks(nrays_, threads_, [&](std::size_t beg, std::size_t end, int) {
            for (std::size_t r = beg; r < end; ++r) {
                Acc dr = P::dot(ray_ptr(r), rv, d_);
                if (P::sign(dr) != 0)
                    P::combine(db, ray_ptr(r), -dr, b.data(), &nc[r * d_], d_);
                else
                    std::copy(ray_ptr(r), ray_ptr(r) + d_, &nc[r * d_]);
                std::copy(zset_ptr(r), zset_ptr(r) + words_, &nz[r * words_]);
                nz[r * words_ + step_ / 64] |= Word(1) << (step_ % 64);  // projected rays are tight
            }
        });
        // b itself becomes a ray, tight on every previously processed row
        std::size_t rb = nrays_;
        std::copy(b.begin(), b.end(), &nc[rb * d_]);
        for (std::size_t t = 0; t < step_; ++t) nz[rb * words_ + t / 64] |= Word(1) << (t % 64);
        coords_.swap(nc);
        zsets_.swap(nz);
        ++nrays_;
        order_.push_back(row);
        ++step_;
    }

    void partition_insert(int row) {
        const Elem* rv = row_ptr(row);
        std::vector<signed char> sign(nrays_);
        std::vector<Acc> dots(nrays_);
        parallel_chunks(nrays_, threads_, [&](std::size_t b, std::size_t e, int) {
            for (std::size_t r = b; r < e; ++r) {
                dots[r] = P::dot(ray_ptr(r), rv, d_);
                sign[r] = (signed char)P::sign(dots[r]);
            }
        });
        std::vector<std::uint32_t> pos, neg, zero;
        for (std::size_t r = 0; r < nrays_; ++r)
            (sign[r] > 0 ? pos : sign[r] < 0 ? neg : zero).push_back(std::uint32_t(r));

        if (neg.empty()) {  // row already valid, only zero-set bookkeeping
            for (std::size_t r = 0; r < nrays_; ++r)
                if (sign[r] == 0) zsets_[r * words_ + step_ / 64] |= Word(1) << (step_ % 64);
            order_.push_back(row);
            ++step_;
            return;
        }
        if (pos.empty()) degenerate_ = true;  // dimension may drop below d - |lin|

        // inverted index: rays tight on each processed row
        std::vector<std::uint32_t> tcount(step_ + 1, 0);
        for (std::size_t r = 0; r < nrays_; ++r) {
            const Word* z = zset_ptr(r);
            for (std::size_t wrd = 0; wrd < words_; ++wrd)
                for (Word m = z[wrd]; m; m &= m - 1)
                    ++tcount[wrd * 64 + std::countr_zero(m)];
        }
        std::vector<std::uint32_t> tstart(step_ + 2, 0);
        for (std::size_t t = 0; t < step_; ++t) tstart[t + 1] = tstart[t] + tcount[t];
        std::vector<std::uint32_t> tlist(tstart[step_]);
        {
            std::vector<std::uint32_t> fill(tstart.begin(), tstart.end() - 1);
            for (std::size_t r = 0; r < nrays_; ++r) {
                const Word* z = zset_ptr(r);
                for (std::size_t wrd = 0; wrd < words_; ++wrd)
                    for (Word m = z[wrd]; m; m &= m - 1)
                        tlist[fill[wrd * 64 + std::countr_zero(m)]++] = std::uint32_t(r);
            }
        }

        int needed = degenerate_ ? 0 : int(d_ - lin_.size()) - 2;
        if (needed < 0) needed = 0;

        struct NewRay {
            std::vector<Elem> v;
            std::vector<Word> z;
        };
        std::vector<std::vector<NewRay>> chunks(threads_ > 0 ? threads_ : 1);
        std::vector<Word> scratch;
        parallel_chunks(pos.size(), threads_, [&](std::size_t b, std::size_t e, int cid) {
            std::vector<Word> T(words_);
            auto& out = chunks[cid];
            for (std::size_t ip = b; ip < e; ++ip) {
                std::uint32_t p = pos[ip];
                const Word* zp = zset_ptr(p);
                for (std::uint32_t n : neg) {
                    const Word* zn = zset_ptr(n);
                    int c = 0;
                    for (std::size_t wrd = 0; wrd < words_; ++wrd) {
                        T[wrd] = zp[wrd] & zn[wrd];
                        c += std::popcount(T[wrd]);
                    }
                    if (c < needed) continue;
                    if (!adjacent(T, p, n, tcount, tstart, tlist)) continue;
                    NewRay nr;
                    nr.v.resize(d_);
                    // dots[p] > 0 > dots[n]; positive combination lands on the hyperplane
                    P::combine(dots[p], ray_ptr(n), -dots[n], ray_ptr(p), nr.v.data(), d_);
                    nr.z.assign(T.begin(), T.end());
                    nr.z[step_ / 64] |= Word(1) << (step_ % 64);
                    out.push_back(std::move(nr));
                }
            }
        });

        std::size_t keep = pos.size() + zero.size(), created = 0;
        for (const auto& c : chunks) created += c.size();
        std::vector<Elem> nc((keep + created) * d_);
        std::vector<Word> nz((keep + created) * words_, 0);
        std::size_t w = 0;
        for (std::uint32_t r : pos) {
            std::copy(ray_ptr(r), ray_ptr(r) + d_, &nc[w * d_]);
            std::copy(zset_ptr(r), zset_ptr(r) + words_, &nz[w * words_]);
            ++w;
        }
        for (std::uint32_t r : zero) {
            std::copy(ray_ptr(r), ray_ptr(r) + d_, &nc[w * d_]);
            std::copy(zset_ptr(r), zset_ptr(r) + words_, &nz[w * words_]);
            nz[w * words_ + step_ / 64] |= Word(1) << (step_ % 64);
            ++w;
        }
        for (auto& c : chunks)
            for (auto& nr : c) {
                std::copy(nr.v.begin(), nr.v.end(), &nc[w * d_]);
                std::copy(nr.z.begin(), nr.z.end(), &nz[w * words_]);
                ++w;
            }
        coords_.swap(nc);
        zsets_.swap(nz);
        nrays_ = w;
        order_.push_back(row);
        ++step_;
        (void)scratch;
    }

    bool adjacent(const std::vector<Word>& T, std::uint32_t p, std::uint32_t n,
                  const std::vector<std::uint32_t>& tcount, const std::vector<std::uint32_t>& tstart,
                  const std::vector<std::uint32_t>& tlist) const {
        // scan the shortest tight list among rows in T
        int best_t = -1;
        std::uint32_t best = ~0u;
        for (std::size_t wrd = 0; wrd < words_; ++wrd)
            for (Word m = T[wrd]; m; m &= m - 1) {
                int t = int(wrd * 64 + std::countr_zero(m));
                if (tcount[t] < best) {
                    best = tcount[t];
                    best_t = t;
                }
            }
        if (best_t < 0) {
            // empty common zero set: every other ray's zero set contains it
            return nrays_ <= 2;
        }
        const std::uint32_t* b = &tlist[tstart[best_t]];
        const std::uint32_t* e = b + tcount[best_t];
        for (const std::uint32_t* it = b; it != e; ++it) {
            std::uint32_t r = *it;
            if (r == p || r == n) continue;
            const Word* z = zset_ptr(r);
            bool contains = true;
            for (std::size_t wrd = 0; wrd < words_; ++wrd)
                if (T[wrd] & ~z[wrd]) {
                    contains = false;
                    break;
                }
            if (contains) return false;
        }
        return true;
    }

    // --- checkpointing ---

    void save_checkpoint() const {
        std::string tmp = opt_.checkpoint_path + ".tmp";
        {
            std::ofstream f(tmp);
            f << "ddstate 1 " << d_ << " " << nrows_ << " " << input_hash_ << "\n";
            f << "order";
            for (int r : order_) f << " " << r;
            f << "\n";
            f << "degenerate " << int(degenerate_) << "\n";
            f << "lines " << lin_.size() << "\n";
            for (const auto& l : lin_) {
                for (int j = 0; j < d_; ++j) f << (j ? " " : "") << P::to_int(l[j]).get_str();
                f << "\n";
            }
            f << "rays " << nrays_ << "\n";
            for (std::size_t r = 0; r < nrays_; ++r) {
                for (int j = 0; j < d_; ++j) f << (j ? " " : "") << P::to_int(coords_[r * d_ + j]).get_str();
                for (std::size_t wrd = 0; wrd < words_; ++wrd) f << " #" << zsets_[r * words_ + wrd];
                f << "\n";
            }
        }
        std::rename(tmp.c_str(), opt_.checkpoint_path.c_str());
    }

    void try_load_checkpoint() {
        std::ifstream f(opt_.checkpoint_path);
        if (!f) return;
        std::string tag;
        int version = 0, dim = 0;
        std::size_t nrows = 0, hash = 0;
        f >> tag >> version >> dim >> nrows >> hash;
        if (tag != "ddstate" || dim != d_ || nrows != nrows_ || hash != input_hash_) return;
        std::vector<int> order;
        f >> tag;  // "order"
        for (std::string word; f >> word && word != "degenerate";) order.push_back(std::stoi(word));
        int degen = 0;
        f >> degen;
        degenerate_ = degen != 0;
        std::size_t nlines = 0;
        f >> tag >> nlines;
        std::vector<std::vector<Elem>> lin(nlines, std::vector<Elem>(d_));
        for (auto& l : lin)
            for (int j = 0; j < d_; ++j) {
                std::string s;
                f >> s;
                l[j] = P::from_int(Int(s));
            }
        std::size_t nrays = 0;
        f >> tag >> nrays;
        std::vector<Elem> coords(nrays * d_);
        std::vector<Word> zsets(nrays * words_, 0);
        for (std::size_t r = 0; r < nrays; ++r) {
            for (int j = 0; j < d_; ++j) {
                std::string s;
                f >> s;
                coords[r * d_ + j] = P::from_int(Int(s));
            }
            for (std::size_t wrd = 0; wrd < words_; ++wrd) {
                std::string s;
                f >> s;
                zsets[r * words_ + wrd] = std::stoull(s.substr(1));
            }
        }
        if (!f) return;  // damaged checkpoint: recompute from scratch
        lin_.swap(lin);
        coords_.swap(coords);
        zsets_.swap(zsets);
        nrays_ = nrays;
        order_ = order;
        step_ = order_.size();
        std::vector<char> used(nrows_, 0);
        for (int r : order_) used[r] = 1;
        pending_.clear();
        for (std::size_t r = 0; r < nrows_; ++r)
            if (!used[r]) pending_.push_back(int(r));
    }

    int d_;
    std::size_t nrows_, words_;
    DDOptions opt_;
    int threads_;
    std::vector<Elem> rows_;
    std::vector<int> pending_;  // input row indices not yet inserted
    std::vector<int> order_;    // insertion order of processed rows
    std::size_t step_ = 0;      // = order_.size()
    std::vector<std::vector<Elem>> lin_;
    std::vector<Elem> coords_;
    std::vector<Word> zsets_;
    std::size_t nrays_ = 0;
    bool degenerate_ = false;
    std::size_t input_hash_ = 0;
};

}  // namespace dd_detail

inline DDResult dual_description(const std::vector<IVec>& rows, int dim, const DDOptions& opt = {}) {
    if (!opt.force_bigint) {
        try {
            return dd_detail::Engine<dd_detail::SmallPolicy>(rows, dim, opt).run();
        } catch (const DDOverflow&) {
            // fall through to exact big integers
        }
    }
    return dd_detail::Engine<dd_detail::BigPolicy>(rows, dim, opt).run();
}

// Dual conversion.  H->V yields extreme rays + lineality; V->H yields facet
// normals + implied-equality normals (non-full-dimensional input).
inline ConeRep dd_convert(const ConeRep& rep, const DDOptions& opt = {}) {
    std::vector<IVec> rows = rep.rows;
    for (const auto& l : rep.lines) {  // equalities / lines enter as opposite row pairs
        rows.push_back(l);
        IVec neg(l.size());
        for (size_t j = 0; j < l.size(); ++j) neg[j] = -l[j];
        rows.push_back(std::move(neg));
    }
    DDResult res = dual_description(rows, rep.dim, opt);
    ConeRep out(rep.kind == RepKind::H ? RepKind::V : RepKind::H, rep.dim);
    for (auto& r : res.rays) {
        normalize_content(r);
        out.rows.push_back(std::move(r));
    }
    for (auto& l : res.lines) {
        normalize_content(l);
        out.lines.push_back(std::move(l));
    }
    std::sort(out.rows.begin(), out.rows.end(),
              [](const IVec& a, const IVec& b) { return lex_cmp(a, b) < 0; });
    out.rows.erase(std::unique(out.rows.begin(), out.rows.end()), out.rows.end());
    return out;
}

// LP test: is row i implied by the others (H) / a conic combination of the
// others (V)?  Deletion is processed sequentially, so the result is a
// non-redundant representation of the same cone.
inline ConeRep remove_redundancy(const ConeRep& rep) {
    ConeRep out = rep;
    out.dedup_rows();
    std::erase_if(out.rows, [](const IVec& v) { return is_zero(v); });
    std::vector<IVec> rows = out.rows;
    std::vector<bool> alive(rows.size(), true);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rep.kind == RepKind::H) {
            // implied iff no x with (other rows).x >= 0, lines.x = 0, row.x <= -1
            LPProblem p(rep.dim);
            for (int j = 0; j < rep.dim; ++j) p.set_free(j);
            for (size_t k = 0; k < rows.size(); ++k)
                if (alive[k] && k != i) p.add_row(to_rational(rows[k]), Rel::GE, rat(0));
            for (const auto& l : out.lines) p.add_row(to_rational(l), Rel::EQ, rat(0));
            p.add_row(to_rational(rows[i]), Rel::LE, rat(-1));
            if (!lp_feasible(p)) alive[i] = false;
        } else {
            // redundant iff row i = sum of nonneg multiples of others (+ lines)
            size_t others = 0;
            for (size_t k = 0; k < rows.size(); ++k)
                if (alive[k] && k != i) ++others;
            LPProblem p(int(others + 2 * out.lines.size()));
            for (int dcoord = 0; dcoord < rep.dim; ++dcoord) {
                QVec a(others + 2 * out.lines.size(), Rat(0));
                size_t c = 0;
                for (size_t k = 0; k < rows.size(); ++k)
                    if (alive[k] && k != i) a[c++] = Rat(rows[k][dcoord]);
                for (const auto& l : out.lines) {
                    a[c++] = Rat(l[dcoord]);
                    a[c++] = -Rat(l[dcoord]);
                }
                p.add_row(std::move(a), Rel::EQ, Rat(rows[i][dcoord]));
            }
            if (lp_feasible(p)) alive[i] = false;
        }
    }
    out.rows.clear();
    for (size_t i = 0; i < rows.size(); ++i)
        if (alive[i]) out.rows.push_back(std::move(rows[i]));
    return out;
}

// Inequality rows of an H-rep that hold with equality over the whole cone.
inline std::vector<size_t> implied_equalities(const ConeRep& rep) {
    if (rep.kind != RepKind::H) throw std::invalid_argument("implied_equalities: H-rep expected");
    std::vector<size_t> eq;
    for (size_t i = 0; i < rep.rows.size(); ++i) {
        LPProblem p(rep.dim);
        for (int j = 0; j < rep.dim; ++j) p.set_free(j);
        for (const auto& r : rep.rows) p.add_row(to_rational(r), Rel::GE, rat(0));
        for (const auto& l : rep.lines) p.add_row(to_rational(l), Rel::EQ, rat(0));
        p.add_row(to_rational(rep.rows[i]), Rel::GE, rat(1));
        if (!lp_feasible(p)) eq.push_back(i);
    }
    return eq;
}

// Dimension of the cone: rank of the generators (V) or ambient dimension
// minus the rank of the implied equalities (H).
inline int cone_dim(const ConeRep& rep) {
    if (rep.kind == RepKind::V) {
        std::vector<IVec> gen = rep.rows;
        gen.insert(gen.end(), rep.lines.begin(), rep.lines.end());
        return rank_i(gen);
    }
    std::vector<IVec> eqs = rep.lines;
    for (size_t i : implied_equalities(rep)) eqs.push_back(rep.rows[i]);
    return rep.dim - rank_i(eqs);
}

}  // namespace hec
