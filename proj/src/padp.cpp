#include "nbraid/padp.hpp"

#include <random>

#include "nbraid/closed.hpp"
#include "nbraid/gfp.hpp"
#include "nbraid/pi1.hpp"

namespace nbraid {

Word embed_word(const SplitSequence& seq, const Word& a) {
  return substitute(a, seq.embed);
}

Word project_word(const SplitSequence& seq, const Word& b) {
  return substitute(b, seq.project);
}

Word sigma_word(const SplitSequence& seq, const Word& c) {
  const Presentation& C = seq.C;
  const std::vector<Word>& sigma = seq.sigma;
  return substitute(c, [&C, &sigma](const GeneratorSymbol& s) {
    int k = C.generator_index(s);
    if (k < 0) return std::optional<Word>{};
    return std::optional<Word>{sigma[k]};
  });
}

SplitSequence braid_sequence(const GroupSpec& spec) {
  if (spec.family != Family::ClosedBraid || spec.n < 2)
    fail(Errc::unsupported,
         "the strand fibration needs a closed group on two or more strands");
  SplitSequence seq;
  seq.B = presentation(spec);
  seq.C = surface_group(spec.g);
  seq.A = bordered_braid(spec.g, 1, spec.n - 1);
  seq.embed = [](const GeneratorSymbol& s) {
    return std::optional<Word>{shift_up(letter_word(s))};
  };
  seq.project = [](const GeneratorSymbol& s) {
    return std::optional<Word>{lambda_image(letter_word(s))};
  };
  std::vector<Word> images = section_images(spec);
  seq.sigma.assign(images.begin() + 1, images.end());
  GroupSpec cspec = seq.C.spec;
  seq.rewrite_kernel = [spec, cspec](const Word& w) {
    if (!is_trivial(lambda_image(w), cspec))
      fail(Errc::rewrite_failure, "word does not lie over the base point");
    return shift_down(kernel_part(w, spec));
  };
  seq.trivial_b = [spec](const Word& w) { return is_trivial(w, spec); };
  seq.trivial_c = [cspec](const Word& w) { return is_trivial(w, cspec); };
  return seq;
}

SplitSequence klein_sequence() {
  SplitSequence seq;
  seq.B = klein_bottle();
  seq.A = free_group(1);
  seq.C = free_group(1);
  const GeneratorSymbol a = seq.B.generators[0];
  const GeneratorSymbol b = seq.B.generators[1];
  const GeneratorSymbol y = seq.A.generators[0];
  seq.embed = [b, y](const GeneratorSymbol& s) {
    if (s == y) return std::optional<Word>{letter_word(b)};
    return std::optional<Word>{};
  };
  seq.project = [a, b, y](const GeneratorSymbol& s) {
    if (s == a) return std::optional<Word>{letter_word(y)};
    if (s == b) return std::optional<Word>{Word{}};
    return std::optional<Word>{};
  };
  seq.sigma = {letter_word(a)};
  seq.rewrite_kernel = [y](const Word& w) {
    auto [j, i] = klein_pair_ab(w);
    if (i != 0)
      fail(Errc::rewrite_failure, "word does not lie over the base point");
    Word out;
    for (long k = 0; k < (j < 0 ? -j : j); ++k)
      out = out * letter_word(y, j < 0 ? -1 : 1);
    return out;
  };
  GroupSpec bspec = seq.B.spec;
  seq.trivial_b = [bspec](const Word& w) { return is_trivial(w, bspec); };
  seq.trivial_c = [](const Word& w) { return w.empty(); };
  return seq;
}

bool check_section(const SplitSequence& seq) {
  for (std::size_t i = 0; i < seq.C.generators.size(); ++i) {
    Word back = project_word(seq, seq.sigma[i]);
    if (!seq.trivial_c(back * letter_word(seq.C.generators[i], -1)))
      return false;
  }
  for (const Word& rel : seq.C.relators)
    if (!seq.trivial_b(sigma_word(seq, rel))) return false;
  return true;
}

bool check_p_almost_direct(const SplitSequence& seq, int p) {
  H1Map h = h1_mod_p(seq.A, p);
  for (const Word& s : seq.sigma) {
    Word sinv = inverse(s);
    for (const GeneratorSymbol& a : seq.A.generators) {
      Word conj = s * embed_word(seq, letter_word(a)) * sinv;
      Word back = seq.rewrite_kernel(conj);
      if (h.project(back) != h.project(letter_word(a))) return false;
    }
  }
  return true;
}

SplitFiltrationReport check_split_filtration(const SplitSequence& seq, int p,
                                             int c_max,
                                             unsigned long long limit) {
  SplitFiltrationReport rep;
  rep.p = p;
  PcQuotient qa = p_quotient(seq.A, p, c_max, limit);
  PcQuotient qb = p_quotient(seq.B, p, c_max, limit);
  PcQuotient qc = p_quotient(seq.C, p, c_max, limit);
  rep.orders_a = filtration_report(qa).orders;
  rep.orders_b = filtration_report(qb).orders;
  rep.orders_c = filtration_report(qc).orders;

  std::vector<int> ra = qa.layer_ranks(), rb = qb.layer_ranks(),
                   rc = qc.layer_ranks();
  int ca = 0, cb = 0, cc = 0;
  for (int k = 0; k < c_max; ++k) {
    ca += ra[k];
    cb += rb[k];
    cc += rc[k];
    rep.multiplicative.push_back(ca + cc == cb);
  }

  // spanning words for the weight-k layer of B, built by the filtration
  // recursion: commutate with a generator or raise to the p-th power
  std::vector<Word> layer;
  for (const GeneratorSymbol& s : seq.B.generators)
    layer.push_back(letter_word(s));
  for (int k = 1; k <= c_max; ++k) {
    if (k > 1) {
      std::vector<Word> next;
      for (const Word& w : layer) {
        for (const GeneratorSymbol& s : seq.B.generators)
          next.push_back(commutator(w, letter_word(s)));
        next.push_back(pow(w, p));
      }
      layer = std::move(next);
    }
    // coordinates of the projected layer inside C's weight-k block
    std::vector<int> cols;
    for (int t = 0; t < qc.ngens(); ++t)
      if (qc.weight[t] == k) cols.push_back(t);
    FpMatrix mx;
    mx.p = p;
    mx.cols = cols.size();
    bool contained = true;
    for (const Word& w : layer) {
      std::vector<int> img = qc.image(project_word(seq, w));
      std::vector<int> row(cols.size());
      for (std::size_t j = 0; j < cols.size(); ++j) row[j] = img[cols[j]];
      for (int t = 0; t < qc.ngens(); ++t)
        if (qc.weight[t] < k && img[t]) contained = false;
      mx.add_row(std::move(row));
    }
    std::size_t rank = rref(mx).size();
    rep.layer_onto.push_back(contained &&
                             rank == static_cast<std::size_t>(rc[k - 1]));
  }

  rep.ok = true;
  for (int k = 0; k < c_max; ++k)
    rep.ok = rep.ok && rep.multiplicative[k] && rep.layer_onto[k];
  return rep;
}

bool lemma_fr_check(const SplitSequence& seq, int p, int m, int n,
                    const Word& u, const Word& v, unsigned long long limit) {
  PcQuotient qa = p_quotient(seq.A, p, m + n - 1, limit);
  Word c = commutator(u, embed_word(seq, v));
  return qa.trivial_image(seq.rewrite_kernel(c));
}

bool lemma_fr_sample(const SplitSequence& seq, int p, int m, int n,
                     int samples, unsigned seed, unsigned long long limit) {
  // deterministic pools: weight-1 words are the sigma images on one side
  // and the kernel generators on the other; deeper pools commutate with a
  // weight-1 word or raise to the p-th power
  std::vector<std::vector<Word>> pool_c{{}}, pool_a{{}};
  pool_c.push_back(seq.sigma);
  std::vector<Word> agens;
  for (const GeneratorSymbol& s : seq.A.generators)
    agens.push_back(letter_word(s));
  pool_a.push_back(agens);
  for (int k = 2; k <= std::max(m, n); ++k) {
    std::vector<Word> pc, pa;
    for (const Word& w : pool_c[k - 1]) {
      for (const Word& s : pool_c[1]) pc.push_back(commutator(w, s));
      pc.push_back(pow(w, p));
    }
    for (const Word& w : pool_a[k - 1]) {
      for (const Word& s : pool_a[1]) pa.push_back(commutator(w, s));
      pa.push_back(pow(w, p));
    }
    pool_c.push_back(std::move(pc));
    pool_a.push_back(std::move(pa));
  }

  PcQuotient qa = p_quotient(seq.A, p, m + n - 1, limit);
  std::mt19937 rng(seed);
  auto pick = [&rng](const std::vector<Word>& pool) {
    return pool[std::uniform_int_distribution<std::size_t>(
        0, pool.size() - 1)(rng)];
  };
  for (int s = 0; s < samples; ++s) {
    Word u = pick(pool_c[m]);
    if (s % 2) u = u * pick(pool_c[m]); // occasionally a product of two
    Word v = s == 0 ? Word{} : pick(pool_a[n]);
    Word c = commutator(u, embed_word(seq, v));
    if (!qa.trivial_image(seq.rewrite_kernel(c))) return false;
  }
  return true;
}

WitnessReport witness(const Word& w, const GroupSpec& spec, int p, int c_max,
                      unsigned long long limit) {
  if (is_trivial(w, spec))
    fail(Errc::trivial_input, "the identity has no separating quotient");
  Presentation pres = presentation(spec);
  WitnessReport rep;
  for (int c = 1; c <= c_max; ++c) {
    PcQuotient q = p_quotient(pres, p, c, limit);
    std::vector<int> img = q.image(w);
    if (img != q.identity()) {
      rep.found = true;
      rep.cls = c;
      rep.image = img;
      rep.order = q.order_string();
      return rep;
    }
  }
  rep.found = false;
  rep.cls = c_max;
  return rep;
}

} // namespace nbraid
