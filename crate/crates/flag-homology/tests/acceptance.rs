//! Acceptance gate. Each test covers one release criterion and prints a
//! single [ OK ] line with the evidence; failures panic with a [FAIL] line.
//! Run with `--nocapture` to see the full report.

use std::collections::HashMap;
use std::collections::VecDeque;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use flag_homology::bruhat::{covered_list, covering_by_code, covering_transposition};
use flag_homology::closedform::{
    betti_table, components, format_chain_spectra, h3_kernel_generators, t3_family_counts,
    t4_family_counts, torsion_t3, torsion_t4, z_cycles, GeneratorChain, GeneratorKind,
};
use flag_homology::coeff::{boundary_coefficient, move_counts};
use flag_homology::complex::{
    build_complex, build_complex_truncated, cell_boundary, manifold_dim, verify_dd_zero, Chain,
    ChainComplex, SparseIntMatrix,
};
use flag_homology::geomcheck::{
    braid_map_det, check_braid_identities, check_commutation, commutation_map_det,
};
use flag_homology::perm::{
    code, evaluate_word, is_minimal_representative, is_reduced, row_reading, spectrum,
    spectrum_cell, Permutation, ThetaSet,
};
use flag_homology::poincare::{free_poincare, torsion_poincare};
use flag_homology::snf::{diagonalize_with_transforms, homology, homology_at, smith_normal_form};

fn th(n: usize, members: &[usize]) -> ThetaSet {
    ThetaSet::new(n, members).unwrap()
}

/// Boundary of a chain evaluated cell by cell, without assembling a complex.
fn free_boundary(chain: &Chain, theta: &ThetaSet) -> Chain {
    let mut acc = Chain::zero(chain.degree() - 1);
    for (w, c) in chain.terms() {
        acc = acc
            .add_scaled(&cell_boundary(w, theta).unwrap(), c)
            .unwrap();
    }
    acc
}

/// Columns of `∂_{d+1}` (zero when the complex stops at degree d) followed by
/// one column per chain, rows indexed by the degree-d cells of `cx`.
fn augmented_matrix(cx: &ChainComplex, d: usize, chains: &[&Chain]) -> SparseIntMatrix {
    let rows = cx.cell_count(d);
    let base = if cx.dim() > d {
        Some(cx.boundary(d + 1).unwrap())
    } else {
        None
    };
    let base_cols = base.map_or(0, |m| m.cols());
    let mut aug = SparseIntMatrix::zero(rows, base_cols + chains.len());
    if let Some(m) = base {
        for (r, c, v) in m.iter() {
            aug.set(r, c, v);
        }
    }
    for (j, ch) in chains.iter().enumerate() {
        for (w, coeff) in ch.terms() {
            let r = cx.position_of(w).expect("generator cell lies in the complex");
            aug.set(r, base_cols + j, coeff);
        }
    }
    aug
}

fn count_twos(m: &SparseIntMatrix) -> usize {
    smith_normal_form(m)
        .diagonal
        .iter()
        .filter(|d| **d == BigInt::from(2))
        .count()
}

#[test]
fn criterion_01_boundary_squares_to_zero() {
    let start = Instant::now();
    let mut complexes = 0usize;
    for n in 2..=6 {
        for theta in ThetaSet::all(n) {
            let cx = build_complex(n, &theta);
            assert!(
                verify_dd_zero(&cx),
                "[FAIL] criterion 1: nonzero boundary square at n={n} theta={theta}"
            );
            complexes += 1;
        }
    }
    let full7 = build_complex(7, &ThetaSet::empty(7));
    assert_eq!(full7.total_cells(), 5040);
    assert!(
        verify_dd_zero(&full7),
        "[FAIL] criterion 1: nonzero boundary square on the full flag complex at n=7"
    );
    println!(
        "[ OK ] criterion 1: boundary squares to zero on {complexes} complexes (n = 2..6, all \
         theta) and on the 5040-cell full flag at n=7 ({:.2?})",
        start.elapsed()
    );
}

#[test]
fn criterion_02_covering_tests_agree() {
    let start = Instant::now();
    let mut pairs = 0usize;
    let mut coverings = 0usize;
    for n in 2..=6 {
        let all = Permutation::all(n);
        for w in &all {
            let cw = code(w);
            for v in &all {
                let by_perm = covering_transposition(w, v);
                let by_code = covering_by_code(&cw, &code(v));
                assert_eq!(
                    by_perm, by_code,
                    "[FAIL] criterion 2: covering tests disagree on w={w}, v={v}"
                );
                pairs += 1;
                coverings += usize::from(by_perm.is_some());
            }
        }
    }
    println!(
        "[ OK ] criterion 2: both covering tests agree on {pairs} ordered pairs through n=6 \
         ({coverings} coverings) ({:.2?})",
        start.elapsed()
    );
}

#[test]
fn criterion_03_betti_numbers_match_free_series() {
    let start = Instant::now();
    let mut checks = 0usize;
    for n in 2..=6 {
        for theta in ThetaSet::all(n) {
            let cx = build_complex(n, &theta);
            let groups = homology(&cx).unwrap();
            let fp = free_poincare(n, &theta);
            for g in &groups {
                assert_eq!(
                    g.betti as i64,
                    fp.coeff(g.degree),
                    "[FAIL] criterion 3: betti mismatch at n={n} theta={theta} degree={}",
                    g.degree
                );
                checks += 1;
            }
        }
    }
    println!(
        "[ OK ] criterion 3: Smith-form betti numbers match the free series coefficients in \
         {checks} degree checks (n = 2..6, all theta) ({:.2?})",
        start.elapsed()
    );
}

#[test]
fn criterion_04_torsion_matches_and_factors_are_two() {
    let start = Instant::now();
    let mut checks = 0usize;
    let mut factors = 0usize;
    for n in 2..=6 {
        for theta in ThetaSet::all(n) {
            let cx = build_complex(n, &theta);
            let groups = homology(&cx).unwrap();
            let tp = torsion_poincare(n, &theta).unwrap();
            for g in &groups {
                assert_eq!(
                    g.torsion_factors.len() as i64,
                    tp.coeff(g.degree),
                    "[FAIL] criterion 4: torsion dimension mismatch at n={n} theta={theta} \
                     degree={}",
                    g.degree
                );
                for f in &g.torsion_factors {
                    assert_eq!(
                        *f,
                        BigInt::from(2),
                        "[FAIL] criterion 4: invariant factor {f} != 2 at n={n} theta={theta} \
                         degree={}",
                        g.degree
                    );
                    factors += 1;
                }
                checks += 1;
            }
        }
    }
    println!(
        "[ OK ] criterion 4: torsion dimensions match the torsion series in {checks} degree \
         checks and all {factors} invariant factors equal 2 ({:.2?})",
        start.elapsed()
    );
}

#[test]
fn criterion_05_degree_three_torsion_formula() {
    let start = Instant::now();
    assert_eq!(torsion_t3(5, &ThetaSet::empty(5)).unwrap(), 9);
    let mut checks = 0usize;
    for n in 3..=7 {
        for theta in ThetaSet::all(n) {
            let dim = manifold_dim(n, &theta);
            if n == 4 && theta.size() == 3 {
                let snf = homology_at(&build_complex(n, &theta), 3).unwrap();
                println!(
                    "note: criterion 5: n=4 theta={theta} is a point, outside the formula's \
                     domain (formula {}, actual {})",
                    torsion_t3(n, &theta).unwrap(),
                    snf.torsion_factors.len()
                );
                continue;
            }
            let cx = build_complex_truncated(n, &theta, 4.min(dim));
            let snf = homology_at(&cx, 3).unwrap().torsion_factors.len() as i64;
            assert_eq!(
                torsion_t3(n, &theta).unwrap(),
                snf,
                "[FAIL] criterion 5: degree-3 torsion formula mismatch at n={n} theta={theta}"
            );
            checks += 1;
        }
    }
    println!(
        "[ OK ] criterion 5: closed degree-3 torsion count matches Smith form in {checks} \
         targets (n = 3..7, all theta; n=5 empty theta = 9) ({:.2?})",
        start.elapsed()
    );
}

#[test]
fn criterion_06_degree_four_torsion_formula() {
    let start = Instant::now();
    assert_eq!(torsion_t4(5, &ThetaSet::empty(5)).unwrap(), 11);
    let mut checks = 0usize;
    for n in 5..=7 {
        for theta in ThetaSet::all(n) {
            let dim = manifold_dim(n, &theta);
            let cx = build_complex_truncated(n, &theta, 5.min(dim));
            let snf = homology_at(&cx, 4).unwrap().torsion_factors.len() as i64;
            assert_eq!(
                torsion_t4(n, &theta).unwrap(),
                snf,
                "[FAIL] criterion 6: degree-4 torsion formula mismatch at n={n} theta={theta}"
            );
            checks += 1;
        }
    }
    let empty4 = ThetaSet::empty(4);
    let formula = torsion_t4(4, &empty4).unwrap();
    let snf = homology_at(&build_complex(4, &empty4), 4)
        .unwrap()
        .torsion_factors
        .len() as i64;
    println!(
        "[WARN] criterion 6: n=4 empty theta: formula value {formula} vs Smith form value \
         {snf} (known discrepancy, recorded verbatim)"
    );
    assert_eq!((formula, snf), (2, 3));
    println!(
        "[ OK ] criterion 6: closed degree-4 torsion count matches Smith form in {checks} \
         targets (n = 5..7, all theta; n=5 empty theta = 11); n=4 reported above ({:.2?})",
        start.elapsed()
    );
}

#[test]
fn criterion_07_rank_four_h3_generator_table() {
    let start = Instant::now();
    // Columns: theta members, expected free labels, expected torsion labels.
    let table: Vec<(&[usize], Vec<&str>, Vec<&str>)> = vec![
        (&[], vec!["X_1", "X_{1,1,2}"], vec!["X_{1,1,3}", "X_{2,2,3}"]),
        (&[1], vec!["X_1"], vec!["X_{2,2,3}"]),
        (&[2], vec!["X_1"], vec!["X_{1,1,3}"]),
        (&[3], vec!["X_1"], vec!["X_{1,1,2}"]),
        (&[1, 2], vec!["X_1"], vec![]),
        (&[1, 3], vec![], vec![]),
        (&[2, 3], vec!["X_1"], vec![]),
    ];
    for (members, want_free, want_torsion) in &table {
        let theta = th(4, members);
        let gens = h3_kernel_generators(4, &theta).unwrap();
        let free: Vec<&GeneratorChain> = gens
            .iter()
            .filter(|g| g.kind == GeneratorKind::Free)
            .collect();
        let torsion: Vec<&GeneratorChain> = gens
            .iter()
            .filter(|g| g.kind == GeneratorKind::Torsion)
            .collect();
        let free_labels: Vec<&str> = free.iter().map(|g| g.label.as_str()).collect();
        let torsion_labels: Vec<&str> = torsion.iter().map(|g| g.label.as_str()).collect();
        assert_eq!(
            (&free_labels, &torsion_labels),
            (want_free, want_torsion),
            "[FAIL] criterion 7: generator column mismatch at theta={theta}"
        );
        for g in &gens {
            assert!(
                free_boundary(&g.chain, &theta).is_zero(),
                "[FAIL] criterion 7: {} is not a cycle at theta={theta}",
                g.label
            );
        }
        // Smith form confirms the column totals.
        let cx = build_complex(4, &theta);
        let h3 = homology_at(&cx, 3).unwrap();
        assert_eq!(
            (h3.betti, h3.torsion_factors.len()),
            (free.len(), torsion.len()),
            "[FAIL] criterion 7: homology group mismatch at theta={theta}"
        );
        // Free classes stay independent over Q after adjoining the image.
        if !free.is_empty() {
            let chains: Vec<&Chain> = free.iter().map(|g| &g.chain).collect();
            let aug = augmented_matrix(&cx, 3, &chains);
            let base_rank = if cx.dim() > 3 {
                smith_normal_form(cx.boundary(4).unwrap()).rank
            } else {
                0
            };
            assert_eq!(
                smith_normal_form(&aug).rank,
                base_rank + free.len(),
                "[FAIL] criterion 7: free classes not independent at theta={theta}"
            );
        }
        // Torsion classes are order-2 and jointly independent: adjoining them
        // to the image removes exactly one invariant factor 2 each.
        if !torsion.is_empty() {
            let boundary4 = cx.boundary(4).unwrap();
            let diag = diagonalize_with_transforms(boundary4);
            for g in &torsion {
                let mut y = vec![BigInt::zero(); cx.cell_count(3)];
                let mut y2 = vec![BigInt::zero(); cx.cell_count(3)];
                for (w, c) in g.chain.terms() {
                    let r = cx.position_of(w).unwrap();
                    y[r] = BigInt::from(c);
                    y2[r] = BigInt::from(2 * c);
                }
                assert!(
                    !diag.image_contains(&y) && diag.image_contains(&y2),
                    "[FAIL] criterion 7: {} is not an order-2 class at theta={theta}",
                    g.label
                );
            }
            let chains: Vec<&Chain> = torsion.iter().map(|g| &g.chain).collect();
            let aug = augmented_matrix(&cx, 3, &chains);
            assert_eq!(
                count_twos(&aug),
                count_twos(boundary4) - torsion.len(),
                "[FAIL] criterion 7: torsion classes not independent at theta={theta}"
            );
        }
    }
    println!(
        "[ OK ] criterion 7: all 7 rank-4 generator columns reproduced; every generator is a \
         cycle representing an independent class of the right order ({:.2?})",
        start.elapsed()
    );
}

#[test]
fn criterion_08_low_degree_betti_table() {
    let start = Instant::now();
    let mut degree_checks = 0usize;
    let mut span_checks = 0usize;
    for n in 2..=7 {
        for theta in ThetaSet::all(n) {
            let dim = manifold_dim(n, &theta);
            let fp = free_poincare(n, &theta);
            let table = betti_table(n, &theta).unwrap();
            let stats = components(n, &theta);

            // Closed-form rows against the free series.
            let circle = n == 2 && theta.size() == 0;
            assert_eq!(table[&1].betti, usize::from(circle));
            assert_eq!(table[&2].betti, 0);
            assert_eq!(table[&4].betti as i64, stats.r0() + stats.r() - 1);
            for d in 1..=6usize {
                assert_eq!(
                    table[&d].betti as i64,
                    fp.coeff(d),
                    "[FAIL] criterion 8: closed-form betti differs from the free series at \
                     n={n} theta={theta} degree={d}"
                );
                degree_checks += 1;
            }

            // Smith form agrees through degree 6.
            if n <= 6 {
                let groups = homology(&build_complex(n, &theta)).unwrap();
                for d in 1..=6.min(dim) {
                    assert_eq!(
                        groups[d].betti,
                        table[&d].betti,
                        "[FAIL] criterion 8: Smith-form betti mismatch at n={n} theta={theta} \
                         degree={d}"
                    );
                }
            } else {
                let cx = build_complex_truncated(n, &theta, 7.min(dim));
                for d in 1..=6usize {
                    assert_eq!(
                        homology_at(&cx, d).unwrap().betti,
                        table[&d].betti,
                        "[FAIL] criterion 8: Smith-form betti mismatch at n={n} theta={theta} \
                         degree={d}"
                    );
                }
            }

            // The explicit degree-4 cycles exist, and their classes span the
            // free rank: adjoining them to the image raises the rank by their
            // number, which equals the betti number itself.
            if n <= 6 {
                let zs = z_cycles(n, &theta).unwrap();
                assert_eq!(zs.len(), table[&4].betti);
                for z in &zs {
                    assert!(
                        free_boundary(&z.chain, &theta).is_zero(),
                        "[FAIL] criterion 8: {} is not a cycle at n={n} theta={theta}",
                        z.label
                    );
                }
                if !zs.is_empty() {
                    let cx = if dim > 4 {
                        build_complex_truncated(n, &theta, 5)
                    } else {
                        build_complex(n, &theta)
                    };
                    let chains: Vec<&Chain> = zs.iter().map(|z| &z.chain).collect();
                    let base_rank = if dim > 4 {
                        smith_normal_form(cx.boundary(5).unwrap()).rank
                    } else {
                        0
                    };
                    let aug = augmented_matrix(&cx, 4, &chains);
                    assert_eq!(
                        smith_normal_form(&aug).rank,
                        base_rank + zs.len(),
                        "[FAIL] criterion 8: degree-4 cycle classes do not span the free part \
                         at n={n} theta={theta}"
                    );
                    span_checks += 1;
                }
            }
        }
    }

    // Named targets. The 2-plane Grassmannian in rank 4:
    let gr24 = th(4, &[1, 3]);
    let zs = z_cycles(4, &gr24).unwrap();
    assert_eq!(zs.len(), 1);
    assert_eq!(format_chain_spectra(&zs[0].chain), "<1,1,2,2>");
    // The 3-plane Grassmannian in rank 6 and its degree-5 class:
    let gr36 = th(6, &[1, 2, 4, 5]);
    let table = betti_table(6, &gr36).unwrap();
    assert_eq!(table[&5].betti, 1);
    let x5 = &table[&5].generators[0];
    assert_eq!(format_chain_spectra(&x5.chain), "<1,2,3,3,3>");
    let cx = build_complex_truncated(6, &gr36, 6);
    let aug = augmented_matrix(&cx, 5, &[&x5.chain]);
    assert_eq!(
        smith_normal_form(&aug).rank,
        smith_normal_form(cx.boundary(6).unwrap()).rank + 1,
        "[FAIL] criterion 8: the degree-5 Grassmannian class does not span the free part"
    );

    println!(
        "[ OK ] criterion 8: closed-form betti table matches the free series and Smith form \
         through degree 6 in {degree_checks} checks (n = 2..7, all theta); degree-4 cycles \
         span the free rank in {span_checks} targets; named Grassmannian generators \
         <1,1,2,2> and <1,2,3,3,3> verified ({:.2?})",
        start.elapsed()
    );
}

// --------------------------------------------------------------- moves

/// Explores the whole commutation/braid component of `start`, recording the
/// move-count parities along the discovery path and asserting they are
/// path-independent (every re-visit sees the same parity pair).
fn move_parity_component(start: &[usize]) -> HashMap<Vec<usize>, (u8, u8)> {
    let mut seen: HashMap<Vec<usize>, (u8, u8)> = HashMap::new();
    let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
    seen.insert(start.to_vec(), (0, 0));
    queue.push_back(start.to_vec());
    while let Some(word) = queue.pop_front() {
        let (cp, bp) = seen[&word];
        let mut push = |next: Vec<usize>, parity: (u8, u8)| {
            if let Some(&prev) = seen.get(&next) {
                assert_eq!(
                    prev, parity,
                    "[FAIL] criterion 9: move parity is path-dependent at word {next:?}"
                );
            } else {
                seen.insert(next.clone(), parity);
                queue.push_back(next);
            }
        };
        for p in 0..word.len().saturating_sub(1) {
            let (a, b) = (word[p], word[p + 1]);
            if a.abs_diff(b) >= 2 {
                let mut next = word.clone();
                next.swap(p, p + 1);
                push(next, (cp ^ 1, bp));
            }
        }
        for p in 0..word.len().saturating_sub(2) {
            let (a, b) = (word[p], word[p + 1]);
            if word[p + 2] == a && a.abs_diff(b) == 1 {
                let mut next = word.clone();
                next[p] = b;
                next[p + 1] = a;
                next[p + 2] = b;
                push(next, (cp, bp ^ 1));
            }
        }
    }
    seen
}

fn check_move_parity(w: &Permutation, w_prime: &Permutation, n: usize) {
    let detail = boundary_coefficient(w, w_prime)
        .detail
        .expect("covering pair has a removal index");
    let word = row_reading(w).delete(detail.removal_index);
    assert!(is_reduced(&word, n));
    assert_eq!(&evaluate_word(&word, n), w_prime);
    let target = row_reading(w_prime);
    let counts = move_counts(w, w_prime).unwrap();
    let component = move_parity_component(word.letters());
    let found = component.get(target.letters()).unwrap_or_else(|| {
        panic!(
            "[FAIL] criterion 9: target word unreachable by moves for w={w}, w'={w_prime}"
        )
    });
    assert_eq!(
        *found,
        (
            (counts.commutations % 2) as u8,
            (counts.braids % 2) as u8
        ),
        "[FAIL] criterion 9: move parity disagrees with the closed-form counts for w={w}, \
         w'={w_prime}"
    );
}

#[test]
fn criterion_09_move_count_parity() {
    let start = Instant::now();
    let mut pairs4 = 0usize;
    for w in Permutation::all(4) {
        for pair in covered_list(&w) {
            check_move_parity(&w, &pair.w_prime, 4);
            pairs4 += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x05EED);
    let mut pairs5 = 0usize;
    while pairs5 < 200 {
        let mut line: Vec<usize> = (1..=5).collect();
        line.shuffle(&mut rng);
        let w = Permutation::new(&line).unwrap();
        let list = covered_list(&w);
        if list.is_empty() {
            continue;
        }
        let pair = &list[rng.gen_range(0..list.len())];
        check_move_parity(&w, &pair.w_prime, 5);
        pairs5 += 1;
    }
    println!(
        "[ OK ] criterion 9: commutation/braid parities match the closed-form move counts on \
         all {pairs4} covering pairs in rank 4 and {pairs5} random pairs in rank 5, with \
         path-independence verified over each component ({:.2?})",
        start.elapsed()
    );
}

// ------------------------------------------------ boundary identity tables

type RhsTerm = (i64, Option<usize>, Vec<usize>);
type EqRow = (&'static str, Vec<usize>, Vec<RhsTerm>);

/// Closed-form boundary identities for three-box spectra.
fn three_cell_rows(n: usize) -> Vec<EqRow> {
    let mut rows: Vec<EqRow> = Vec::new();
    for i in 1..=n - 3 {
        rows.push(("b3-1", vec![i, i, i], vec![(-2, Some(i + 2), vec![i, i + 2])]));
    }
    for i in 1..=n - 2 {
        rows.push(("b3-2", vec![i, i, i + 1], vec![]));
    }
    for i in 1..=n - 3 {
        rows.push(("b3-3", vec![i, i, i + 2], vec![]));
    }
    for i in 1..=n - 4 {
        for k in i + 3..=n - 1 {
            rows.push(("b3-4", vec![i, i, k], vec![(-2, None, vec![i, k])]));
        }
    }
    for i in 1..=n - 3 {
        rows.push((
            "b3-5",
            vec![i, i + 1, i + 1],
            vec![(2, None, vec![i, i + 1]), (-2, None, vec![i + 1, i + 1])],
        ));
    }
    for i in 1..=n - 4 {
        for k in i + 2..=n - 2 {
            rows.push(("b3-6", vec![i, k, k], vec![(2, None, vec![i, k])]));
        }
    }
    for i in 1..=n - 3 {
        rows.push((
            "b3-7",
            vec![i, i + 1, i + 2],
            vec![(2, Some(i), vec![i, i + 2])],
        ));
    }
    for i in 1..=n - 4 {
        for k in i + 3..=n - 1 {
            rows.push(("b3-8", vec![i, k - 1, k], vec![(2, None, vec![i, k])]));
        }
    }
    for i in 1..=n - 4 {
        for k in i + 3..=n - 1 {
            rows.push(("b3-9", vec![i, i + 1, k], vec![(-2, None, vec![i + 1, k])]));
        }
    }
    for i in 1..=n - 5 {
        for j in i + 2..=n - 3 {
            for k in j + 2..=n - 1 {
                rows.push(("b3-10", vec![i, j, k], vec![]));
            }
        }
    }
    rows
}

/// Closed-form boundary identities for four-box spectra.
fn four_cell_rows(n: usize) -> Vec<EqRow> {
    let mut rows: Vec<EqRow> = Vec::new();
    let mut push = |name: &'static str, lhs: Vec<usize>, rhs: Vec<RhsTerm>| {
        rows.push((name, lhs, rhs));
    };
    for i in 1..=n - 4 {
        push(
            "b4-1",
            vec![i, i, i, i],
            vec![
                (-2, Some(i + 2), vec![i, i + 2, i + 2]),
                (-2, None, vec![i, i, i]),
            ],
        );
        push("b4-4", vec![i, i, i, i + 3], vec![
            (-2, None, vec![i, i + 2, i + 3]),
            (-2, None, vec![i, i, i + 3]),
        ]);
        push("b4-16", vec![i, i + 1, i + 1, i + 3], vec![(-2, None, vec![i + 1, i + 1, i + 3])]);
        push("b4-9", vec![i, i, i + 2, i + 2], vec![(-2, None, vec![i, i, i + 2])]);
        push(
            "b4-18",
            vec![i, i + 1, i + 2, i + 2],
            vec![
                (2, Some(i), vec![i, i + 2, i + 2]),
                (-2, None, vec![i, i + 1, i + 2]),
            ],
        );
        push(
            "b4-19",
            vec![i, i + 1, i + 2, i + 3],
            vec![
                (-2, None, vec![i + 1, i + 2, i + 3]),
                (-2, Some(i + 1), vec![i, i + 1, i + 3]),
            ],
        );
        push(
            "b4-14",
            vec![i, i + 1, i + 1, i + 1],
            vec![
                (-2, None, vec![i + 1, i + 1, i + 1]),
                (2, Some(i + 3), vec![i, i + 1, i + 3]),
            ],
        );
    }
    for i in 1..=n - 3 {
        push("b4-2", vec![i, i, i, i + 1], vec![]);
        push("b4-3", vec![i, i, i, i + 2], vec![(-2, None, vec![i, i, i + 2])]);
        push(
            "b4-6",
            vec![i, i, i + 1, i + 1],
            vec![
                (2, Some(i + 2), vec![i + 1, i + 1, i + 2]),
                (-2, Some(i), vec![i, i, i + 1]),
            ],
        );
        push("b4-7", vec![i, i, i + 1, i + 2], vec![(-2, None, vec![i, i, i + 2])]);
        push("b4-15", vec![i, i + 1, i + 1, i + 2], vec![]);
    }
    for i in 1..=n - 3 {
        for k in i + 4..=n - 1 {
            push("b4-5", vec![i, i, i, k], vec![(-2, Some(i + 2), vec![i, i + 2, k])]);
        }
    }
    for i in 1..=n - 2 {
        for j in i + 3..=n - 1 {
            push("b4-8", vec![i, i, i + 1, j], vec![]);
        }
    }
    for i in 1..=n - 2 {
        for j in i + 2..=n - 2 {
            push("b4-10", vec![i, i, j, j + 1], vec![
                (-2, None, vec![i, j, j + 1]),
                (-2, None, vec![i, i, j + 1]),
            ]);
        }
    }
    for i in 1..=n - 2 {
        for j in i + 4..=n - 1 {
            push("b4-11", vec![i, i, i + 2, j], vec![]);
        }
    }
    for i in 1..=n - 2 {
        for j in i + 3..=n - 3 {
            for k in j + 2..=n - 1 {
                push("b4-12", vec![i, i, j, k], vec![(-2, None, vec![i, j, k])]);
            }
        }
    }
    for i in 1..=n - 2 {
        for j in i + 3..=n - 2 {
            push("b4-13", vec![i, i, j, j], vec![
                (-2, None, vec![i, j, j]),
                (-2, None, vec![i, i, j]),
            ]);
        }
    }
    for i in 1..=n - 3 {
        for j in i + 4..=n - 1 {
            push("b4-17", vec![i, i + 1, i + 1, j], vec![
                (-2, None, vec![i + 1, i + 1, j]),
                (2, None, vec![i, i + 1, j]),
            ]);
        }
    }
    for i in 1..n {
        for j in i + 3..=n - 2 {
            push("b4-20", vec![i, i + 1, j, j + 1], vec![
                (-2, None, vec![i + 1, j, j + 1]),
                (-2, None, vec![i, i + 1, j + 1]),
            ]);
        }
    }
    for i in 1..n {
        for j in i + 2..=n - 3 {
            push("b4-21", vec![i, j, j + 1, j + 1], vec![
                (2, None, vec![i, j + 1, j + 1]),
                (-2, None, vec![i, j, j + 1]),
            ]);
            push("b4-24", vec![i, j, j, j], vec![(2, Some(j + 2), vec![i, j, j + 2])]);
            push("b4-26", vec![i, j, j, j + 2], vec![]);
            push("b4-31", vec![i, j, j + 1, j + 2], vec![(-2, Some(j), vec![i, j, j + 2])]);
        }
    }
    for i in 1..n {
        for j in i + 3..=n - 2 {
            push("b4-22", vec![i, i + 1, j, j], vec![
                (-2, None, vec![i + 1, j, j]),
                (-2, None, vec![i, i + 1, j]),
            ]);
        }
    }
    for i in 1..n {
        for j in i + 3..=n - 3 {
            for k in j + 2..=n - 1 {
                push("b4-23", vec![i, i + 1, j, k], vec![(-2, None, vec![i + 1, j, k])]);
            }
        }
    }
    for i in 1..n {
        for j in i + 2..=n - 2 {
            push("b4-25", vec![i, j, j, j + 1], vec![]);
        }
    }
    for i in 1..n {
        for j in i + 2..=n - 2 {
            for k in j + 3..=n - 1 {
                push("b4-27", vec![i, j, j, k], vec![(2, None, vec![i, j, k])]);
            }
        }
    }
    for i in 1..n {
        for j in i + 2..=n - 4 {
            for k in j + 2..=n - 2 {
                push("b4-28", vec![i, j, k, k], vec![(-2, None, vec![i, j, k])]);
            }
        }
    }
    for i in 1..=n - 3 {
        for k in i + 4..=n - 1 {
            push("b4-29", vec![i, i + 1, i + 2, k], vec![(2, Some(i), vec![i, i + 2, k])]);
        }
    }
    for i in 1..n {
        for j in i + 2..=n - 4 {
            for k in j + 3..=n - 1 {
                push("b4-30", vec![i, j, j + 1, k], vec![(2, None, vec![i, j + 1, k])]);
            }
        }
    }
    for i in 1..n {
        for j in i + 2..=n - 4 {
            for k in j + 2..=n - 2 {
                push("b4-32", vec![i, j, k, k + 1], vec![(-2, None, vec![i, j, k + 1])]);
            }
        }
    }
    for i in 1..n {
        for j in i + 2..n {
            for k in j + 2..n {
                for l in k + 2..n {
                    push("b4-33", vec![i, j, k, l], vec![]);
                }
            }
        }
    }
    rows
}

struct EqInstance {
    name: &'static str,
    lhs: Permutation,
    rhs: Vec<(i64, Option<usize>, Permutation)>,
}

fn instantiate(n: usize, rows: Vec<EqRow>) -> Vec<EqInstance> {
    rows.into_iter()
        .map(|(name, lhs, rhs)| EqInstance {
            name,
            lhs: spectrum_cell(n, &lhs).unwrap_or_else(|e| {
                panic!("[FAIL] criterion 10: bad left side in row {name} {lhs:?}: {e}")
            }),
            rhs: rhs
                .into_iter()
                .map(|(c, ind, target)| {
                    let cell = spectrum_cell(n, &target).unwrap_or_else(|e| {
                        panic!("[FAIL] criterion 10: bad target in row {name} {target:?}: {e}")
                    });
                    (c, ind, cell)
                })
                .collect(),
        })
        .collect()
}

#[test]
fn criterion_10_boundary_identity_tables() {
    let start = Instant::now();
    let mut checks = 0usize;
    for n in 5..=9 {
        let mut instances = instantiate(n, three_cell_rows(n));
        instances.extend(instantiate(n, four_cell_rows(n)));
        for theta in ThetaSet::all(n) {
            for inst in &instances {
                if !is_minimal_representative(&inst.lhs, &theta) {
                    continue;
                }
                let degree = inst.lhs.length();
                let terms: Vec<(Permutation, i64)> = inst
                    .rhs
                    .iter()
                    .filter(|(_, ind, _)| ind.is_none_or(|m| !theta.contains(m)))
                    .map(|(c, _, cell)| (cell.clone(), *c))
                    .collect();
                let expected = Chain::from_terms(degree - 1, &terms).unwrap();
                let actual = cell_boundary(&inst.lhs, &theta).unwrap();
                let diff = actual.add_scaled(&expected, -1).unwrap();
                assert!(
                    diff.is_zero(),
                    "[FAIL] criterion 10: row {} fails at n={n} theta={theta} cell {}",
                    inst.name,
                    spectrum(&code(&inst.lhs))
                );
                checks += 1;
            }
        }
    }
    println!(
        "[ OK ] criterion 10: all 10 three-box and 33 four-box boundary identities, with \
         indicator factors, regenerate from the coefficient formula in {checks} instances \
         (n = 5..9, all theta) ({:.2?})",
        start.elapsed()
    );
}

#[test]
fn criterion_11_rotation_identities() {
    let start = Instant::now();
    const TOL: f64 = 1e-12;
    let mut max_dev: f64 = 0.0;
    for n in 3..=5usize {
        for i in 1..=n - 2 {
            let report = check_braid_identities(n, i, 20).unwrap();
            assert!(
                report.passes(TOL),
                "[FAIL] criterion 11: braid identity deviates by {} at n={n} i={i}",
                report.max()
            );
            max_dev = max_dev.max(report.max());
        }
        for i in 1..n {
            for j in i + 2..n {
                let dev = check_commutation(n, i, j, 20).unwrap();
                assert!(
                    dev <= TOL,
                    "[FAIL] criterion 11: commutation deviates by {dev} at n={n} ({i},{j})"
                );
                max_dev = max_dev.max(dev);
            }
        }
    }
    for len in 3..=6usize {
        for k in 1..len {
            assert_eq!(commutation_map_det(len, k).unwrap(), -1);
        }
        for k in 1..=len - 2 {
            assert_eq!(braid_map_det(len, k).unwrap(), 1);
        }
    }
    println!(
        "[ OK ] criterion 11: rotation identities hold to max deviation {max_dev:.2e} \
         (n = 3..5, 20 samples each) and coordinate-map determinants are exactly -1 and +1 \
         ({:.2?})",
        start.elapsed()
    );
}

#[test]
fn criterion_12_family_count_identities() {
    let start = Instant::now();
    let mut checks = 0usize;
    for n in 5..=9 {
        for theta in ThetaSet::all(n) {
            let stats = components(n, &theta);
            let t3_sum: i64 = t3_family_counts(n, &theta).unwrap().iter().sum();
            assert_eq!(
                t3_sum,
                torsion_t3(n, &theta).unwrap() + stats.r0(),
                "[FAIL] criterion 12: degree-3 family counts do not sum to the torsion count \
                 at n={n} theta={theta}"
            );
            let t4_sum: i64 = t4_family_counts(n, &theta).unwrap().iter().sum();
            assert_eq!(
                t4_sum,
                torsion_t4(n, &theta).unwrap(),
                "[FAIL] criterion 12: degree-4 family counts do not sum to the torsion count \
                 at n={n} theta={theta}"
            );
            if n <= 6 {
                // The families exactly count the explicit kernel generators.
                let gens = h3_kernel_generators(n, &theta).unwrap();
                assert_eq!(t3_sum, gens.len() as i64);
            }
            checks += 1;
        }
    }
    println!(
        "[ OK ] criterion 12: census family counts sum to the closed torsion formulas on \
         {checks} targets (n = 5..9, all theta), matching the generator census through n=6 \
         ({:.2?})",
        start.elapsed()
    );
}
