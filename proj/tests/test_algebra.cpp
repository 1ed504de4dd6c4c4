#include <doctest.h>

#include "lukra/algebra.hpp"
#include "lukra/errors.hpp"
#include "lukra/laws.hpp"
#include "support.hpp"

using namespace lukra;

TEST_CASE("chain tables agree with the fraction oracle") {
    for (std::size_t n = 2; n <= 9; ++n) {
        const auto c = make_chain(n);
        CHECK(c.imp_table() == testsupport::chain_imp_oracle(n));
        CHECK(c.top() == n - 1);
        CHECK(c.bottom() == Elem{0});
        for (Elem x = 0; x < n; ++x) CHECK(c.delta(x) == (x == n - 1 ? n - 1 : 0));
    }
}

TEST_CASE("chain constructor flags") {
    const auto plain = make_chain(3, false, false);
    CHECK_FALSE(plain.has_delta());
    CHECK_FALSE(plain.bottom().has_value());
    CHECK_THROWS_AS(plain.delta(0), ConfigurationError);
}

TEST_CASE("table validation") {
    CHECK_THROWS_AS(FiniteAlgebra(2, {1, 1, 0}, 1), InvalidArgument);
    CHECK_THROWS_AS(FiniteAlgebra(2, {1, 1, 0, 2}, 1), InvalidArgument);
    CHECK_THROWS_AS(FiniteAlgebra(2, {1, 1, 0, 1}, 2), InvalidArgument);
}

TEST_CASE("iterated implication and join") {
    const auto l3 = make_chain(3);
    CHECK(imp_k(l3, 1, 0, 2) == 2);
    CHECK(imp_k(l3, 1, 0, 1) == 1);
    for (Elem x = 0; x < 3; ++x)
        for (Elem y = 0; y < 3; ++y) CHECK(imp_k(l3, x, y, 0) == y);
    CHECK(join(l3, 0, 1) == 1);
    const auto p = product({make_chain(3), make_chain(2)});
    for (Elem x = 0; x < p.size(); ++x) {
        CHECK(leq(p, x, p.top()));
        CHECK(join(p, x, x) == x);
    }
}

TEST_CASE("join is the least upper bound") {
    const auto p = product({make_chain(3), make_chain(4)});
    for (Elem x = 0; x < p.size(); ++x)
        for (Elem y = 0; y < p.size(); ++y) {
            const Elem j = join(p, x, y);
            CHECK(leq(p, x, j));
            CHECK(leq(p, y, j));
            for (Elem u = 0; u < p.size(); ++u)
                if (leq(p, x, u) && leq(p, y, u)) CHECK(leq(p, j, u));
        }
}

TEST_CASE("five-element algebra without a Delta") {
    const auto a = testsupport::five_element();
    CHECK(check_LR(a).passed());
    CHECK(check_LRn(a, 3).passed());
    CHECK(tarskian_elements(a) == std::vector<Elem>{0, 3, 4});
    CHECK(t_below(a, 1).empty());
    const auto d = delta_admissible(a);
    CHECK_FALSE(d.admissible());
    CHECK(d.witness == Elem{1});
    CHECK(min_n(a) == std::size_t{3});
}

TEST_CASE("admissible Delta on chains is Baaz Delta") {
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto d = delta_admissible(make_chain(n, false, true));
        REQUIRE(d.admissible());
        CHECK(*d.delta == *make_chain(n).delta_table());
    }
    const FiniteAlgebra one(1, {0}, 0);
    const auto d = delta_admissible(one);
    REQUIRE(d.admissible());
    CHECK(*d.delta == std::vector<Elem>{0});
}

TEST_CASE("delta_admissible needs the residuation axioms") {
    const FiniteAlgebra bad(2, {1, 1, 1, 1}, 1);
    CHECK_THROWS_AS(delta_admissible(bad), PreconditionError);
}

TEST_CASE("min_n") {
    CHECK(min_n(make_chain(4)) == std::size_t{4});
    CHECK(min_n(make_chain(2)) == std::size_t{2});
    CHECK(min_n(product({make_chain(3), make_chain(2)})) == std::size_t{3});
    CHECK(min_n(product({make_chain(4), make_chain(3)})) == std::size_t{4});
}

TEST_CASE("products") {
    const auto e = product({});
    CHECK(e.size() == 1);
    const std::vector<std::size_t> sizes{4, 3, 2};
    for (Elem i = 0; i < 24; ++i) CHECK(product_index(sizes, product_coords(sizes, i)) == i);
    CHECK(product_coords(sizes, 1) == std::vector<Elem>{0, 0, 1});
    CHECK_THROWS_AS(product({make_chain(3), make_chain(3, false, true)}), SignatureMismatch);
    const auto p = testsupport::big_product();
    CHECK(p.size() == 24);
    CHECK(check_LRn(p, 4).passed());
    CHECK(check_delta(p, 4).passed());
}

TEST_CASE("homomorphism counts") {
    const auto l2 = make_chain(2);
    CHECK(homomorphisms(l2, l2).size() == 1);
    // Ł3Δ has no Δ-homomorphism onto Ł2Δ: ½ would have to go to a Δ-fixed point.
    CHECK(epimorphisms(make_chain(3), make_chain(2)).empty());
    CHECK(homomorphisms(make_chain(2), make_chain(3)).size() == 1);
    // Ł3 is simple as a residuation algebra too.
    CHECK(epimorphisms(make_chain(3, false, false), make_chain(2, false, false)).empty());
    CHECK(is_isomorphic(make_chain(4), make_chain(4)).has_value());
    CHECK_FALSE(is_isomorphic(make_chain(4), make_chain(3)).has_value());
}

TEST_CASE("upper sets of chains are copies of smaller chains") {
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto ln = make_chain(n, false, false);
        for (std::size_t k = 2; k <= n; ++k) {
            std::vector<Elem> up;
            for (Elem x = static_cast<Elem>(n - k); x < n; ++x) up.push_back(x);
            REQUIRE(is_subuniverse(ln, up));
            const auto sub = subalgebra(ln, up);
            CHECK(is_isomorphic(sub.algebra, make_chain(k, false, false)).has_value());
        }
    }
}

TEST_CASE("subalgebra closure") {
    const auto l5 = make_chain(5);
    CHECK(subalgebra_closure(l5, {}) == std::vector<Elem>{4});
    // 3/4 generates 1/2, 1/4 and 0 under ->, Δ.
    CHECK(subalgebra_closure(l5, {3}) == std::vector<Elem>{0, 1, 2, 3, 4});
    CHECK(subalgebra_closure(l5, {2}) == std::vector<Elem>{0, 2, 4});
    const auto gens = generating_set(testsupport::big_product());
    CHECK(subalgebra_closure(testsupport::big_product(), gens).size() == 24);
}

TEST_CASE("Delta is the greatest Tarskian element below x") {
    for (const auto& a : testsupport::random_subalgebras(7, 20)) {
        for (Elem x = 0; x < a.size(); ++x) {
            const auto tx = t_below(a, x);
            REQUIRE(std::find(tx.begin(), tx.end(), a.delta(x)) != tx.end());
            for (Elem t : tx) CHECK(leq(a, t, a.delta(x)));
        }
    }
}

TEST_CASE("Delta is unique among tables passing the Delta laws") {
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto a = make_chain(n);
        const auto base = *a.delta_table();
        for (Elem x = 0; x < n; ++x)
            for (Elem v = 0; v < n; ++v) {
                if (v == base[x]) continue;
                auto d = base;
                d[x] = v;
                CHECK_FALSE(check_delta(a.with_delta(d), n).passed());
            }
    }
}

TEST_CASE("Tarskian elements are closed under x ->[n-1] t") {
    for (const auto& a : testsupport::random_subalgebras(11, 20)) {
        const std::size_t n = *min_n(a);
        for (Elem t : tarskian_elements(a))
            for (Elem x = 0; x < a.size(); ++x) CHECK(is_tarskian(a, imp_k(a, x, t, n - 1)));
    }
}

TEST_CASE("Tarskian elements of chains") {
    for (std::size_t n = 2; n <= 7; ++n)
        CHECK(tarskian_elements(make_chain(n)) == std::vector<Elem>{0, static_cast<Elem>(n - 1)});
    CHECK(tarskian_elements(make_chain(2)) == std::vector<Elem>{0, 1});
}

TEST_CASE("homomorphisms send Tarskian elements to Tarskian elements of the image") {
    const auto subs = testsupport::random_subalgebras(13, 8);
    for (const auto& a : subs) {
        for (std::size_t k = 2; k <= 4; ++k) {
            const auto target = make_chain(k, true, a.bottom().has_value());
            for (const auto& h : homomorphisms(a, target)) {
                std::vector<Elem> image(h.begin(), h.end());
                std::sort(image.begin(), image.end());
                image.erase(std::unique(image.begin(), image.end()), image.end());
                const auto img = subalgebra(target, image).algebra;
                for (Elem t : tarskian_elements(a)) {
                    const auto pos = std::lower_bound(image.begin(), image.end(), h[t]) - image.begin();
                    CHECK(is_tarskian(img, static_cast<Elem>(pos)));
                }
            }
        }
    }
}

TEST_CASE("stabilization of iterated implication") {
    for (std::size_t n = 2; n <= 6; ++n) CHECK(check_stabilization(make_chain(n), n).passed());
    for (const auto& a : testsupport::random_subalgebras(17, 10)) CHECK(check_stabilization(a, 4).passed());
}
