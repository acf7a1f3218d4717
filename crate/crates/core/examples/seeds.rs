//! Extracts the series seed table from an enumeration run.
use polycycle_core::enumerate::{enumerate_elementary, Sequential, Task};
use polycycle_core::{families, series, Params, Polycycle};
use std::collections::{BTreeMap, BTreeSet};

fn encode(p: &Polycycle, cut: &[u32]) -> String {
    let (m, new_id, _) = p.map().canonical_relabel(&{
        (0..p.map().face_count())
            .map(|f| if p.is_hole(f) { 0 } else { p.map().face(f).len() as u32 })
            .collect::<Vec<_>>()
    });
    let holes: Vec<bool> = {
        let c = p.canonical_form();
        c.hole_flags().to_vec()
    };
    let hole_dart = (0..m.dart_count() as u32).find(|&d| holes[m.face_of(d)]).unwrap();
    let rots: Vec<String> = m.rotations().iter().map(|r| format!("&{:?}", r)).collect();
    let cut: Vec<u32> = cut.iter().map(|&d| new_id[d as usize]).collect();
    format!("Encoded {{ rot: &[{}], hole: {}, cut: &{:?} }}", rots.join(", "), hole_dart, cut)
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let q: u32 = args[1].parse().unwrap();
    let (r, max, min): (Vec<u32>, usize, usize) = if q == 3 { (vec![3, 4, 5], 11, 5) } else { (vec![2, 3], 20, 8) };
    let params = Params::new(r, q).unwrap();
    let res = enumerate_elementary(&Task::new(params.clone(), max), &Sequential).unwrap();
    let idx: BTreeMap<_, _> = res.iter().enumerate().map(|(i, p)| (p.canonical_code(), i)).collect();
    let band: BTreeSet<usize> = (0..res.len()).filter(|&i| series::has_band(&res[i])).collect();
    let mut pred: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for &i in &band {
        for c in series::cuts(&res[i]) {
            if !series::repeats(&res[i], &c, 3) {
                continue;
            }
            let (x, _) = series::insert_cell(&res[i], &c).unwrap();
            if let Some(&j) = idx.get(&x.canonical_code()) {
                pred.entry(j).or_default().insert(i);
            }
        }
    }
    let top = band.iter().map(|&i| res[i].face_count()).max().unwrap();
    let mut chains = Vec::new();
    for &t in band.iter().filter(|&&i| res[i].face_count() == top) {
        let mut chain = vec![t];
        while let Some(ps) = pred.get(chain.last().unwrap()) {
            assert_eq!(ps.len(), 1);
            chain.push(*ps.iter().next().unwrap());
        }
        chain.reverse();
        let e = series::end_pieces(&res[t], min).unwrap();
        chains.push((chain, [e[0].0.clone(), e[1].0.clone()]));
    }
    let ends: BTreeSet<_> = chains.iter().flat_map(|(_, e)| e.iter().cloned()).collect();
    let ends: Vec<_> = ends.into_iter().collect();
    let end_id = |c: &polycycle_core::CanonicalCode| ends.iter().position(|x| x == c).unwrap();
    // self-pair chains per ending
    let selfc: BTreeMap<usize, &Vec<usize>> =
        chains.iter().filter(|(_, e)| e[0] == e[1]).map(|(c, e)| (end_id(&e[0]), c)).collect();
    let ext = |i: usize| res[*selfc[&i].last().unwrap()].is_extensible();
    // early (pre-band) members: non-band entries inserting straight into a chain's first member
    let early_of = |first: usize| -> Vec<usize> {
        (0..res.len())
            .filter(|i| !band.contains(i))
            .filter(|&i| {
                series::cuts(&res[i]).iter().any(|c| {
                    series::insert_cell(&res[i], c)
                        .map(|(x, _)| x.canonical_code() == res[first].canonical_code())
                        .unwrap_or(false)
                })
            })
            .collect()
    };
    let mut letter = vec![usize::MAX; ends.len()];
    if q == 3 {
        let alpha = *selfc.iter().find(|(_, c)| res[c[0]].gon_sizes().iter().all(|&g| g == 5)).unwrap().0;
        letter[alpha] = 0;
        let exts: Vec<usize> = (0..ends.len()).filter(|&i| i != alpha && ext(i)).collect();
        let non: Vec<usize> = (0..ends.len()).filter(|&i| !ext(i)).collect();
        assert_eq!((exts.len(), non.len()), (2, 3));
        // alpha, beta, gamma, delta, epsilon, mu
        letter[exts[0]] = 1;
        letter[exts[1]] = 3;
        letter[non[0]] = 2;
        letter[non[1]] = 4;
        letter[non[2]] = 5;
    } else {
        let alpha =
            *selfc.iter().find(|(_, c)| early_of(c[0]).iter().any(|&i| res[i].gon_sizes() == vec![3; 5])).unwrap().0;
        let gamma = (0..ends.len()).find(|&i| !ext(i)).unwrap();
        letter[alpha] = 0;
        letter[gamma] = 2;
        let beta = (0..ends.len()).find(|&i| i != alpha && i != gamma).unwrap();
        letter[beta] = 1;
    }
    let mut out = Vec::new();
    for (chain, e) in &chains {
        let (a, b) = (letter[end_id(&e[0])], letter[end_id(&e[1])]);
        let pair = (a.min(b), a.max(b));
        let first = chain[0];
        let seed = &res[first];
        let cut = series::cuts(seed)
            .into_iter()
            .find(|c| {
                series::repeats(seed, c, 3)
                    && series::insert_cell(seed, c).unwrap().0.canonical_code() == res[chain[1]].canonical_code()
            })
            .unwrap();
        let mut early: Vec<String> = Vec::new();
        if q == 3 && pair == (0, 0) {
            early.push(encode(&families::monocycle(5).unwrap(), &[]));
            early.push(encode(&families::gon_triple(5, 5, 5).unwrap(), &[]));
        }
        if q == 5 && (pair == (0, 0) || pair == (0, 1)) {
            let cands = early_of(first);
            let pick = if pair == (0, 0) {
                cands.iter().copied().find(|&i| res[i].gon_sizes() == vec![3; 5]).unwrap()
            } else {
                // the early member shared with no other seed beyond alpha-beta: the all-but-one triangle entry
                cands.iter().copied().find(|&i| res[i].gon_sizes() == vec![2, 3, 3, 3, 3]).unwrap()
            };
            early.push(encode(&res[pick], &[]));
        }
        out.push((
            pair,
            format!(
                "    Row {{ pair: ({}, {}), early: &[{}], seed: {} }},",
                pair.0,
                pair.1,
                early.join(", "),
                encode(seed, &cut)
            ),
        ));
    }
    out.sort();
    println!("const Q{}: &[Row] = &[", q);
    for (_, s) in out {
        println!("{s}");
    }
    println!("];");
}
