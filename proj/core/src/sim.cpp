#include "ildpc/sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace ildpc {

namespace {

// Frames per scheduling batch. Fixed so that the set of simulated frames --
// and therefore every count -- does not depend on the thread count.
constexpr long kFrameBatch = 256;

struct FrameTotals {
    long long bit_errors = 0;
    long long bit_error_sq_sum = 0;
    long frame_errors = 0;
    long long iterations = 0;

    void operator+=(const FrameTotals& o) {
        bit_errors += o.bit_errors;
        bit_error_sq_sum += o.bit_error_sq_sum;
        frame_errors += o.frame_errors;
        iterations += o.iterations;
    }
};

struct FrameWorker {
    const CodeInstance& code;
    const SweepConfig& cfg;
    double variance;
    double sigma;
    std::uint64_t point_key;
    std::optional<IterativeDecoder> decoder;
    std::vector<std::uint8_t> msg;

    FrameWorker(const CodeInstance& code_, const SweepConfig& cfg_, double variance_,
                std::uint64_t point_key_)
        : code(code_), cfg(cfg_), variance(variance_), sigma(std::sqrt(variance_)),
          point_key(point_key_) {
        if (!code.is_uncoded())
            decoder.emplace(code.parity(), cfg.algorithm, cfg.decoder);
        msg.resize(code.k());
    }

    FrameTotals simulate(std::uint64_t frame_index) {
        CounterStream stream(cfg.seed, point_key, frame_index);
        if (cfg.message_source == MessageSource::random) {
            for (auto& b : msg) b = stream.next_bit() ? 1 : 0;
        } else {
            std::fill(msg.begin(), msg.end(), 0);
        }

        std::vector<std::uint8_t> codeword =
            code.is_uncoded() ? msg : code.code().encode(msg);
        std::vector<double> signal = bpsk_modulate(codeword);
        awgn_in_place(signal, sigma, stream);
        const std::vector<double> llr = llr_init(signal, variance, cfg.decoder.clip);

        FrameTotals t;
        if (code.is_uncoded()) {
            long long errs = 0;
            for (std::size_t i = 0; i < llr.size(); ++i)
                errs += ((llr[i] < 0 ? 1 : 0) != codeword[i]) ? 1 : 0;
            t.bit_errors = errs;
            t.bit_error_sq_sum = errs * errs;
            t.frame_errors = errs > 0 ? 1 : 0;
            return t;
        }
        const DecodeResult res = decoder->decode(llr);
        const long long errs = static_cast<long long>(hamming_distance(res.bits, codeword));
        t.bit_errors = errs;
        t.bit_error_sq_sum = errs * errs;
        t.frame_errors = errs > 0 ? 1 : 0;
        t.iterations = res.iterations_used;
        return t;
    }
};

}  // namespace

double ber_standard_error(const BerPoint& p) {
    if (p.bits == 0) return 0.0;
    return std::sqrt(static_cast<double>(p.bit_error_sq_sum)) / static_cast<double>(p.bits);
}

CodeInstance CodeInstance::from_parity_check(ParityCheckMatrix H, std::uint64_t max_dense_bits) {
    CodeInstance inst;
    inst.code_ = systematic_generator(H, max_dense_bits);
    inst.n_ = inst.code_->n;
    inst.k_ = inst.code_->k;
    inst.H_ = std::move(H);
    return inst;
}

CodeInstance CodeInstance::uncoded(std::size_t n) {
    if (n == 0) throw std::invalid_argument("uncoded block length must be positive");
    CodeInstance inst;
    inst.n_ = n;
    inst.k_ = n;
    return inst;
}

BerPoint run_point(const CodeInstance& code, const SweepConfig& cfg, double ebn0_db) {
    if (cfg.max_frames < 1) throw std::invalid_argument("max_frames must be >= 1");
    if (cfg.min_bit_errors < 0) throw std::invalid_argument("min_bit_errors must be >= 0");

    ChannelConfig chan;
    chan.ebn0_db = ebn0_db;
    chan.rate_for_sigma = code.rate();
    chan.seed = cfg.seed;
    const double variance = noise_variance(chan);
    const std::uint64_t point_key = std::bit_cast<std::uint64_t>(ebn0_db);

    const int threads =
        cfg.threads > 0 ? cfg.threads
                        : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::vector<FrameWorker> workers;
    workers.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) workers.emplace_back(code, cfg, variance, point_key);

    FrameTotals totals;
    long frames = 0;
    while (frames < cfg.max_frames) {
        const long count = std::min<long>(kFrameBatch, cfg.max_frames - frames);
        if (threads <= 1 || count == 1) {
            for (long f = 0; f < count; ++f)
                totals += workers[0].simulate(static_cast<std::uint64_t>(frames + f));
        } else {
            const int active = static_cast<int>(std::min<long>(threads, count));
            std::vector<FrameTotals> partial(static_cast<std::size_t>(active));
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(active - 1));
            auto work = [&](int w) {
                FrameTotals local;
                for (long f = w; f < count; f += active)
                    local += workers[static_cast<std::size_t>(w)].simulate(
                        static_cast<std::uint64_t>(frames + f));
                partial[static_cast<std::size_t>(w)] = local;
            };
            for (int w = 1; w < active; ++w) pool.emplace_back(work, w);
            work(0);
            for (auto& t : pool) t.join();
            for (const auto& p : partial) totals += p;
        }
        frames += count;
        if (cfg.min_bit_errors > 0 && totals.bit_errors >= cfg.min_bit_errors) break;
    }

    BerPoint point;
    point.ebn0_db = ebn0_db;
    point.frames = frames;
    point.bits = static_cast<long long>(frames) * static_cast<long long>(code.n());
    point.bit_errors = totals.bit_errors;
    point.ber = point.bits ? static_cast<double>(point.bit_errors) / static_cast<double>(point.bits) : 0.0;
    point.frame_errors = totals.frame_errors;
    point.fer = frames ? static_cast<double>(point.frame_errors) / static_cast<double>(frames) : 0.0;
    point.avg_iterations = frames ? static_cast<double>(totals.iterations) / static_cast<double>(frames) : 0.0;
    point.bit_error_sq_sum = totals.bit_error_sq_sum;
    return point;
}

std::vector<BerPoint> run_sweep(const CodeInstance& code, const SweepConfig& cfg) {
    if (cfg.ebn0_grid_db.empty()) throw std::invalid_argument("empty Eb/N0 grid");
    std::vector<BerPoint> points;
    points.reserve(cfg.ebn0_grid_db.size());
    for (const double ebn0 : cfg.ebn0_grid_db) points.push_back(run_point(code, cfg, ebn0));
    return points;
}

std::string emit_csv(std::span<const BerPoint> points) {
    std::string out = "ebn0_db,frames,bits,bit_errors,ber,frame_errors,fer,avg_iters\n";
    char buf[256];
    for (const auto& p : points) {
        std::snprintf(buf, sizeof(buf), "%.6g,%ld,%lld,%lld,%.5e,%ld,%.5e,%.6f\n", p.ebn0_db,
                      p.frames, p.bits, p.bit_errors, p.ber, p.frame_errors, p.fer,
                      p.avg_iterations);
        out += buf;
    }
    return out;
}

std::vector<BerPoint> parse_csv(const std::string& text) {
    std::vector<BerPoint> points;
    std::size_t pos = 0;
    bool header = true;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        const std::string line = text.substr(pos, end - pos);
        pos = end + 1;
        if (line.empty()) continue;
        if (header) {
            if (line != "ebn0_db,frames,bits,bit_errors,ber,frame_errors,fer,avg_iters")
                throw std::invalid_argument("csv: unexpected header");
            header = false;
            continue;
        }
        std::vector<std::string> fields;
        std::size_t fpos = 0;
        while (true) {
            const std::size_t comma = line.find(',', fpos);
            fields.push_back(line.substr(fpos, comma - fpos));
            if (comma == std::string::npos) break;
            fpos = comma + 1;
        }
        if (fields.size() != 8) throw std::invalid_argument("csv: wrong field count");
        BerPoint p;
        p.ebn0_db = std::strtod(fields[0].c_str(), nullptr);
        p.frames = std::strtol(fields[1].c_str(), nullptr, 10);
        p.bits = std::strtoll(fields[2].c_str(), nullptr, 10);
        p.bit_errors = std::strtoll(fields[3].c_str(), nullptr, 10);
        p.ber = std::strtod(fields[4].c_str(), nullptr);
        p.frame_errors = std::strtol(fields[5].c_str(), nullptr, 10);
        p.fer = std::strtod(fields[6].c_str(), nullptr);
        p.avg_iterations = std::strtod(fields[7].c_str(), nullptr);
        points.push_back(p);
    }
    if (header) throw std::invalid_argument("csv: missing header");
    return points;
}

std::vector<double> parse_ebn0_grid(const std::string& text) {
    const std::size_t c1 = text.find(':');
    const std::size_t c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("Eb/N0 grid must be start:step:stop");
    auto parse_num = [](const std::string& s) {
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (end == s.c_str() || *end != '\0')
            throw std::invalid_argument("Eb/N0 grid has a malformed number: " + s);
        return v;
    };
    const double start = parse_num(text.substr(0, c1));
    const double step = parse_num(text.substr(c1 + 1, c2 - c1 - 1));
    const double stop = parse_num(text.substr(c2 + 1));
    if (!(step > 0) && start != stop)
        throw std::invalid_argument("Eb/N0 grid step must be positive");
    if (stop < start) throw std::invalid_argument("Eb/N0 grid stop precedes start");

    std::vector<double> grid;
    double v = start;
    while (v <= stop + step / 2) {
        grid.push_back(v);
        if (grid.size() > 10000) throw std::invalid_argument("Eb/N0 grid too long");
        const double next = v + step;
        if (!(next > v)) break;  // zero step or infinities: single point
        v = next;
    }
    return grid;
}

}  // namespace ildpc
