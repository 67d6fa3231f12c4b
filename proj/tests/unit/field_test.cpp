#include <gtest/gtest.h>

#include <random>

#include <cyclo/error.hpp>
#include <cyclo/field.hpp>

#include "oracle.hpp"

using namespace cyclo;

namespace {

const char* kSmallFields[] = {"2", "3", "4", "5", "7", "8", "9", "11", "16", "25", "27", "32", "49", "64", "81", "121", "125", "128", "243", "256"};

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Overflow;
}

}  // namespace

TEST(PrimeField, Construction) {
  const FieldCtx f2 = make_prime_field(2);
  EXPECT_EQ(f2.size(), 2u);
  EXPECT_EQ(f2.degree(), 1u);
  EXPECT_EQ(f2.literal(), "2");
  const FieldCtx f5 = make_prime_field(5);
  EXPECT_EQ(f5.add(Fe{3}, Fe{4}), Fe{2});
  EXPECT_EQ(f5.mul(Fe{3}, Fe{4}), Fe{2});
  EXPECT_EQ(kind_of([] { make_prime_field(6); }), ErrorKind::NotPrime);
  EXPECT_EQ(kind_of([] { make_prime_field(1); }), ErrorKind::NotPrime);
}

TEST(PrimeField, Inverse) {
  EXPECT_EQ(make_prime_field(5).inv(Fe{2}), Fe{3});
  EXPECT_EQ(make_prime_field(7).inv(Fe{3}), Fe{5});
  EXPECT_EQ(make_prime_field(2).inv(Fe{1}), Fe{1});
  EXPECT_EQ(kind_of([] { make_prime_field(7).inv(Fe{0}); }), ErrorKind::DivisionByZero);
}

TEST(PrimeField, FromIntReducesNegatives) {
  const FieldCtx f5 = make_prime_field(5);
  EXPECT_EQ(f5.from_int(-1), Fe{4});
  EXPECT_EQ(f5.from_int(12), Fe{2});
  EXPECT_EQ(parse_field("4").from_int(3), Fe{1});
}

TEST(PrimitiveElement, SmallestGenerator) {
  EXPECT_EQ(make_prime_field(5).primitive_element(), Fe{2});
  EXPECT_EQ(make_prime_field(2).primitive_element(), Fe{1});
  EXPECT_EQ(make_prime_field(7).primitive_element(), Fe{3});
  for (const char* lit : kSmallFields) {
    const FieldCtx f = parse_field(lit);
    const Fe g = f.primitive_element();
    ASSERT_EQ(element_order(f, g), f.size() - 1) << lit;
    for (std::uint32_t v = 1; v < g.v; ++v) ASSERT_LT(element_order(f, Fe{v}), f.size() - 1) << lit;
  }
}

TEST(ElementOrder, Examples) {
  EXPECT_EQ(element_order(make_prime_field(7), Fe{2}), 3u);
  EXPECT_EQ(element_order(make_prime_field(5), Fe{4}), 2u);
  for (const char* lit : {"2", "9", "64"}) EXPECT_EQ(element_order(parse_field(lit), Fe{1}), 1u);
  EXPECT_EQ(kind_of([] { element_order(make_prime_field(7), Fe{0}); }), ErrorKind::DivisionByZero);
}

TEST(ElementOrder, DividesGroupOrder) {
  for (const char* lit : kSmallFields) {
    const FieldCtx f = parse_field(lit);
    const oracle::SlowField slow = oracle::slow_field(f);
    for (std::uint32_t v = 1; v < f.size(); ++v) {
      const std::uint64_t ord = element_order(f, Fe{v});
      ASSERT_EQ((f.size() - 1) % ord, 0u) << lit << " " << v;
      if (f.size() <= 64) {
        ASSERT_EQ(slow.pow(v, ord), 1u);
        for (std::uint64_t e = 1; e < ord; ++e) ASSERT_NE(slow.pow(v, e), 1u);
      }
    }
  }
}

TEST(NthRootOfUnity, Examples) {
  EXPECT_EQ(nth_root_of_unity(make_prime_field(7), 3), Fe{2});
  EXPECT_EQ(nth_root_of_unity(parse_field("9"), 1), Fe{1});
  const FieldCtx f4 = parse_field("4");
  const Fe z = nth_root_of_unity(f4, 3);
  EXPECT_EQ(element_order(f4, z), 3u);
  EXPECT_EQ(kind_of([] { nth_root_of_unity(make_prime_field(7), 4); }), ErrorKind::NotCompatible);
}

TEST(CanonicalModulus, FrozenSmallCases) {
  auto modulus = [](const char* lit) {
    const FieldCtx f = parse_field(lit);
    return std::vector<std::uint32_t>(f.modulus().begin(), f.modulus().end());
  };
  EXPECT_EQ(modulus("4"), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(modulus("8"), (std::vector<std::uint32_t>{1, 1, 0, 1}));
  EXPECT_EQ(modulus("9"), (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(modulus("16"), (std::vector<std::uint32_t>{1, 1, 0, 0, 1}));
}

TEST(CanonicalModulus, FirstIrreducibleInEncodingOrder) {
  for (const char* lit : kSmallFields) {
    const FieldCtx f = parse_field(lit);
    if (f.degree() == 1) continue;
    const std::int64_t p = f.characteristic();
    const oracle::IPoly m(f.modulus().begin(), f.modulus().end());
    ASSERT_TRUE(oracle::irreducible(m, p)) << lit;
    const std::uint32_t chosen = oracle::encode(oracle::IPoly(m.begin(), m.end() - 1), p);
    for (std::uint32_t low = 0; low < chosen; ++low) {
      oracle::IPoly g = oracle::decode(low, p);
      g.resize(f.degree(), 0);
      g.push_back(1);
      ASSERT_FALSE(oracle::irreducible(g, p)) << lit << " skipped candidate " << low;
    }
  }
}

TEST(FieldArithmetic, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(20240601);
  for (const char* lit : kSmallFields) {
    const FieldCtx f = parse_field(lit);
    std::uniform_int_distribution<std::uint32_t> pick(0, f.size() - 1);
    for (int t = 0; t < 200; ++t) {
      const Fe a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
      ASSERT_EQ(f.add(a, b), f.add(b, a));
      ASSERT_EQ(f.mul(a, b), f.mul(b, a));
      ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
      ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      ASSERT_EQ(f.add(a, f.neg(a)), f.zero());
      ASSERT_EQ(f.sub(f.add(a, b), b), a);
      if (!a.is_zero()) {
        ASSERT_EQ(f.mul(a, f.inv(a)), f.one());
        ASSERT_EQ(f.mul(f.div(b, a), a), b);
      }
    }
  }
}

TEST(FieldArithmetic, AgreesWithPolynomialModel) {
  std::mt19937_64 rng(7);
  std::vector<FieldCtx> fields;
  for (const char* lit : kSmallFields) fields.push_back(parse_field(lit));
  // Past the table limit the generic carry-less / digit paths are used.
  fields.push_back(make_field(2, 20, kRootSearchCap));
  fields.push_back(make_field(3, 11, kRootSearchCap));
  fields.push_back(make_field(257, 2, kRootSearchCap));
  for (const FieldCtx& f : fields) {
    const oracle::SlowField slow = oracle::slow_field(f);
    std::uniform_int_distribution<std::uint32_t> pick(0, f.size() - 1);
    for (int t = 0; t < 300; ++t) {
      const std::uint32_t a = pick(rng), b = pick(rng);
      ASSERT_EQ(f.mul(Fe{a}, Fe{b}).v, slow.mul(a, b)) << f.literal();
      ASSERT_EQ(f.add(Fe{a}, Fe{b}).v, slow.add(a, b)) << f.literal();
    }
    const Fe a{1 + pick(rng) % (f.size() - 1)};
    ASSERT_EQ(f.mul(a, f.inv(a)), f.one()) << f.literal();
  }
}

TEST(FieldArithmetic, FrobeniusFixesField) {
  for (const char* lit : {"2", "4", "8", "9", "16", "27", "64", "81", "256", "512", "625", "729", "1024", "2048", "3125", "4096"}) {
    const FieldCtx f = parse_field(lit);
    for (std::uint32_t v = 0; v < f.size(); ++v) ASSERT_EQ(f.pow(Fe{v}, f.size()), Fe{v}) << lit;
  }
  for (const char* lit : {"4", "8", "9", "16", "25", "27", "49", "64", "81", "125", "256"}) {
    const FieldCtx f = parse_field(lit);
    const std::uint32_t p = f.characteristic();
    for (std::uint32_t a = 0; a < f.size(); ++a)
      for (std::uint32_t b = 0; b < f.size(); ++b)
        ASSERT_EQ(f.pow(f.add(Fe{a}, Fe{b}), p), f.add(f.pow(Fe{a}, p), f.pow(Fe{b}, p))) << lit;
  }
}

TEST(FieldElements, CoordinateRoundTrip) {
  const FieldCtx f8 = parse_field("2^3");
  EXPECT_EQ(f8.coords(Fe{5}), (std::vector<std::uint32_t>{1, 0, 1}));
  const std::vector<std::uint32_t> one_plus_u2{1, 0, 1};
  EXPECT_EQ(f8.from_coords(one_plus_u2), Fe{5});
  for (std::uint32_t v = 0; v < f8.size(); ++v) EXPECT_EQ(f8.from_coords(f8.coords(Fe{v})), Fe{v});
  const std::vector<std::uint32_t> too_long{1, 0, 0, 1};
  const std::vector<std::uint32_t> out_of_range{2};
  EXPECT_EQ(kind_of([&] { f8.from_coords(too_long); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([&] { f8.from_coords(out_of_range); }), ErrorKind::ParseError);
}

TEST(FieldLiteral, Parsing) {
  EXPECT_EQ(parse_field("2^3"), parse_field("8"));
  EXPECT_EQ(parse_field("3^2").literal(), "3^2");
  EXPECT_EQ(parse_field("9").literal(), "3^2");
  EXPECT_EQ(parse_field("5").literal(), "5");
  EXPECT_FALSE(parse_field("4") == parse_field("2"));
  EXPECT_EQ(kind_of([] { parse_field("6"); }), ErrorKind::NotPrime);
  EXPECT_EQ(kind_of([] { parse_field("x"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_field("2^0"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_field("2^17"); }), ErrorKind::DegreeTooLarge);
}

TEST(Extension, Examples) {
  const FieldCtx f2 = make_prime_field(2);
  const FieldExtension e8 = make_extension(f2, 3);
  EXPECT_EQ(e8.field.size(), 8u);
  EXPECT_EQ(e8.degree, 3u);
  const FieldExtension same = make_extension(f2, 1);
  EXPECT_EQ(same.field.size(), 2u);
  EXPECT_TRUE(same.embedding.is_identity());

  const FieldCtx f4 = parse_field("4");
  const FieldExtension e16 = make_extension(f4, 2);
  EXPECT_EQ(e16.field.size(), 16u);
  for (std::uint32_t a = 0; a < 4; ++a) {
    const Fe image = e16.embedding(Fe{a});
    EXPECT_EQ(e16.field.pow(image, 4), image);
    EXPECT_EQ(e16.embedding.preimage(image), Fe{a});
  }
  EXPECT_EQ(kind_of([&] { make_extension(f2, 30); }), ErrorKind::DegreeTooLarge);
}

TEST(Extension, EmbeddingIsInjectiveHomomorphism) {
  for (const char* lit : {"2", "3", "4", "5", "7", "8"}) {
    const FieldCtx base = parse_field(lit);
    for (unsigned m = 1; m <= 6; ++m) {
      std::uint64_t size = 1;
      for (unsigned i = 0; i < m; ++i) size *= base.size();
      if (size > 64) break;
      const FieldExtension ext = make_extension(base, m);
      ASSERT_EQ(ext.field.size(), size);
      std::vector<bool> seen(size, false);
      for (std::uint32_t a = 0; a < base.size(); ++a) {
        const Fe ia = ext.embedding(Fe{a});
        ASSERT_FALSE(seen[ia.v]);
        seen[ia.v] = true;
        for (std::uint32_t b = 0; b < base.size(); ++b) {
          const Fe ib = ext.embedding(Fe{b});
          ASSERT_EQ(ext.embedding(base.add(Fe{a}, Fe{b})), ext.field.add(ia, ib)) << lit << " m=" << m;
          ASSERT_EQ(ext.embedding(base.mul(Fe{a}, Fe{b})), ext.field.mul(ia, ib)) << lit << " m=" << m;
        }
      }
      ASSERT_EQ(ext.embedding(base.one()), ext.field.one());
    }
  }
}
