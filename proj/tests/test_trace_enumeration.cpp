#include "dproc/model_library.hpp"
#include "dproc/trace_enumeration.hpp"
#include "dproc/verify.hpp"
#include "reference_semantics.hpp"

#include <doctest.h>

#include <algorithm>

using namespace dproc;
using C = Constraint;

namespace {

/// Independent of both enumerators: filter every sequence with the reference
/// semantics.
std::vector<Trace> reference_traces(const DeclarativeProcess &p) {
    std::vector<Trace> out;
    for (const auto &s : ref::all_sequences(p.alphabet().ids()))
        if (ref::holds_all(s, p.constraints()))
            out.emplace_back(s);
    return out;
}

} // namespace

TEST_CASE("two free activities") {
    const auto p = new_process("two", Alphabet::range(1, 2), {});
    const auto expected = std::vector<Trace>{{}, {1}, {2}, {1, 2}, {2, 1}};
    CHECK(enumerate_bruteforce(p).traces == expected);
    CHECK(enumerate_pruned(p).traces == expected);
    CHECK(count_valid(p) == 5);
}

TEST_CASE("partial permutation counts") {
    CHECK(partial_permutation_count(0) == 1);
    CHECK(partial_permutation_count(2) == 5);
    CHECK(partial_permutation_count(3) == 16);
    CHECK(partial_permutation_count(10) == 9'864'101);
    for (unsigned n = 0; n <= 6; ++n)
        CHECK(count_valid(new_process("free", Alphabet::range(1, n), {})) == partial_permutation_count(n));
}

TEST_CASE("brute force refuses alphabets beyond the cap") {
    const auto p = new_process("eleven", Alphabet::range(1, 11), {});
    CHECK_THROWS_AS(enumerate_bruteforce(p), CapExceeded);
    CHECK_THROWS_WITH(enumerate_bruteforce(p, 4), doctest::Contains("cap of 4"));
    const auto small = new_process("three", Alphabet::range(1, 3), {});
    CHECK_NOTHROW(enumerate_bruteforce(small, 3));
}

TEST_CASE("FDAP enumeration by both engines") {
    const auto p = fdap().process;
    const auto pruned = enumerate_pruned(p);
    CHECK(pruned.count() == 46);
    CHECK(pruned.process_name == "FDAP");
    CHECK(enumerate_bruteforce(p) == pruned);
    CHECK(pruned.traces == reference_traces(p));
}

TEST_CASE("valid traces are not prefix closed") {
    const auto traces = enumerate_pruned(fdap().process);
    CHECK(traces.contains(Trace{1, 2, 3, 4}));
    CHECK_FALSE(traces.contains(Trace{1, 2}));
    CHECK_FALSE(traces.contains(Trace{1, 2, 3}));
}

TEST_CASE("modification counts") {
    CHECK(count_valid(fdap_m1().process) == 14);
    CHECK(count_valid(fdap_m2().process) == 144);
    CHECK(count_valid(fdap_m3().process) == 852);
    CHECK(count_valid(fdap_m2_without_audit_ordering()) == 147);
}

TEST_CASE("the three traces separating the two M2 readings") {
    const auto with = enumerate_pruned(fdap_m2().process);
    const auto without = enumerate_pruned(fdap_m2_without_audit_ordering());
    std::vector<Trace> extra;
    std::set_difference(without.traces.begin(), without.traces.end(), with.traces.begin(), with.traces.end(),
                        std::back_inserter(extra), CanonicalTraceOrder{});
    CHECK(extra == std::vector<Trace>{{11}, {11, 1}, {11, 1, 9, 10}});
}

TEST_CASE("contradictory precedences exclude traces containing both") {
    const auto p = new_process("cycle", Alphabet::range(1, 3), {C::prec(1, 2), C::prec(2, 1)});
    const auto traces = enumerate_bruteforce(p);
    CHECK(traces == enumerate_pruned(p));
    for (const auto &t : traces.traces)
        CHECK_FALSE((t.contains(1) && t.contains(2)));
    CHECK(traces.traces == reference_traces(p));

    const auto forced = new_process("forced", Alphabet::range(1, 3),
                                    {C::mustexist(1), C::prec(1, 2), C::prec(2, 1)});
    const auto fs = enumerate_bruteforce(forced);
    CHECK(fs.count() == count_valid(forced));
    // 1 must occur, so 2 has to precede it, which breaks prec(1,2).
    CHECK(fs.count() == 0);
}

TEST_CASE("empty alphabet admits only the empty trace") {
    const auto p = new_process("empty", Alphabet{}, {});
    CHECK(enumerate_pruned(p).traces == std::vector<Trace>{Trace{}});
    CHECK(count_valid(p, {4}) == 1);
}

TEST_CASE("a process can have no valid traces") {
    const auto none = new_process("none", Alphabet::range(1, 2), {C::mustexist(1), C::prec(2, 1), C::resp(1, 2)});
    CHECK(count_valid(none) == 0);
    CHECK(enumerate_bruteforce(none).count() == 0);
}

TEST_CASE("parallel search is deterministic") {
    const auto p = fdap_m3().process;
    const auto one = enumerate_pruned(p, {1});
    for (unsigned threads : {2u, 3u, 8u, 0u}) {
        CHECK(enumerate_pruned(p, {threads}) == one);
        CHECK(count_valid(p, {threads}) == 852);
    }
}

TEST_CASE("for_each_valid streams the same traces") {
    const auto p = fdap().process;
    std::vector<Trace> seen;
    for_each_valid(p, [&](std::span<const ActivityId> t) { seen.emplace_back(std::vector(t.begin(), t.end())); });
    sort_canonical(seen);
    CHECK(seen == enumerate_pruned(p).traces);
}

TEST_CASE("oracle equivalence and constraint monotonicity on random processes") {
    std::mt19937_64 rng(42);
    for (std::size_t i = 0; i < 100; ++i) {
        const auto p = random_process(rng, i);
        const auto brute = enumerate_bruteforce(p);
        REQUIRE(brute == enumerate_pruned(p));
        CHECK(brute.traces == reference_traces(p));

        // Adding any one constraint never adds traces.
        std::mt19937_64 extra_rng(i);
        const auto extra = random_process(extra_rng, i + 1);
        for (const auto &c : extra.constraints()) {
            if (c.subject() > p.alphabet().size())
                continue;
            bool in_range = true;
            for (ActivityId a : c.objects())
                in_range = in_range && a <= p.alphabet().size();
            if (!in_range)
                continue;
            auto cs = p.constraints();
            cs.push_back(c);
            const auto tighter = enumerate_pruned(new_process("tighter", p.alphabet(), cs));
            CHECK(std::includes(brute.traces.begin(), brute.traces.end(), tighter.traces.begin(),
                                tighter.traces.end(), CanonicalTraceOrder{}));
        }
    }
}
