use std::collections::BTreeMap;

use super::context::GroupContext;
use super::{CheckResult, Evidence, Status};
use crate::error::Result;
use crate::graph::{is_connected, reduced_graph, universal_vertices};
use crate::solubilizer::{commutator_condition_on, remark_hits, CommutatorMode, BRUTE_FORCE_BUDGET};
use crate::structure::{centralizer_bits, cyclic_normalizer_bits, nilpotency_class, quotient_by_bits};
use crate::Error;

pub struct CheckInfo {
    pub id: &'static str,
    pub anchor: &'static str,
    /// Only meaningful for insoluble groups; skipped otherwise.
    pub insoluble_only: bool,
    run: fn(&GroupContext) -> Result<Outcome>,
}

macro_rules! check {
    ($id:literal, $anchor:literal, $insoluble:expr, $run:ident) => {
        CheckInfo { id: $id, anchor: $anchor, insoluble_only: $insoluble, run: $run }
    };
}

pub static CHECKS: &[CheckInfo] = &[
    check!("thompson_complete", "Thompson: soluble iff the graph is complete", false, thompson_complete),
    check!(
        "radical_eq_universal",
        "Guralnick et al.: R(G) is the set of universal vertices",
        false,
        radical_eq_universal
    ),
    check!("chain_containment", "Lemma 2.1(a)", false, chain_containment),
    check!("divisibility_o_x", "Lemma 2.1(c)", false, divisibility_o_x),
    check!("divisibility_centralizer", "Lemma 2.2", false, divisibility_centralizer),
    check!("quotient_law", "Lemma 2.3", false, quotient_law),
    check!("thm_A_iff", "Theorem A", false, thm_a_iff),
    check!("lemma_nilpk", "Lemma 3.1", false, lemma_nilpk),
    check!("lem_subgroup_odd_prime_power", "Lemma 4.1", true, lem_subgroup_odd_prime_power),
    check!("thm_B_not_p_squared", "Theorem B", true, thm_b_not_p_squared),
    check!("cor_cubo", "Corollary 4.1", true, cor_cubo),
    check!("prop_not_8", "Proposition 4.2", true, prop_not_8),
    check!("lem_six_values", "Lemma 4.4", false, lem_six_values),
    check!("prop_not_6", "Proposition 4.5", true, prop_not_6),
    check!("cor_geq_10", "Corollary: |Sol| >= 10", true, cor_geq_10),
    check!("prop_3p", "Proposition 4.7", true, prop_3p),
    check!("lemma_bob", "Lemma 4.2", false, lemma_bob),
    check!("sol_not_prime", "|Sol| is never prime for insoluble G", true, sol_not_prime),
    check!("diameter_bounds", "Diameter at most 5, at most 3 if not almost simple", true, diameter_bounds),
    check!("remark_k4_search", "Remark after Theorem A (k >= 4)", true, remark_k4_search),
];

pub fn check_ids() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.id).collect()
}

pub(crate) struct Outcome {
    status: Status,
    element: Option<String>,
    evidence: BTreeMap<String, Evidence>,
    note: Option<String>,
}

impl Outcome {
    fn new(status: Status) -> Self {
        Outcome { status, element: None, evidence: BTreeMap::new(), note: None }
    }

    fn verdict(ok: bool) -> Self {
        Outcome::new(if ok { Status::Pass } else { Status::Fail })
    }

    pub fn skipped(reason: impl Into<String>) -> Self {
        Outcome::new(Status::Skipped).note(reason)
    }

    fn with(mut self, key: &str, value: impl Into<Evidence>) -> Self {
        self.evidence.insert(key.to_string(), value.into());
        self
    }

    fn at(mut self, element: String) -> Self {
        self.element = Some(element);
        self
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn into_result(self, check: &CheckInfo, group: &str) -> CheckResult {
        CheckResult {
            check_id: check.id.to_string(),
            group_name: group.to_string(),
            element: self.element,
            status: self.status,
            evidence: self.evidence,
            paper_anchor: check.anchor.to_string(),
            note: self.note,
        }
    }
}

pub(crate) fn run(check: &CheckInfo, ctx: &GroupContext) -> Outcome {
    if check.insoluble_only && ctx.soluble {
        return Outcome::skipped("requires an insoluble group");
    }
    match (check.run)(ctx) {
        Ok(outcome) => outcome,
        Err(Error::BudgetExceeded { needed, budget }) => {
            Outcome::skipped(format!("work budget exceeded ({needed} > {budget})"))
        }
        Err(e) => Outcome::verdict(false).note(format!("error: {e}")),
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `(p, e)` with `n = p^e`, `e ≥ 1`.
fn prime_power(n: usize) -> Option<(usize, u32)> {
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    let mut e = 0;
    while m.is_multiple_of(p) {
        m /= p;
        e += 1;
    }
    (m == 1).then_some((p, e))
}

/// Fails at the first element whose solubilizer size is rejected by `bad`.
fn size_scan(ctx: &GroupContext, bad: impl Fn(usize) -> bool) -> Outcome {
    let n = ctx.order();
    let min = (0..n).map(|x| ctx.atlas.size(x)).min().unwrap_or(0);
    let base = |ok| Outcome::verdict(ok).with("elements", n).with("min_sol_size", min);
    match (0..n).find(|&x| bad(ctx.atlas.size(x))) {
        Some(x) => base(false).with("sol_size", ctx.atlas.size(x)).at(ctx.element_name(x)),
        None => base(true),
    }
}

fn thompson_complete(ctx: &GroupContext) -> Result<Outcome> {
    let complete = ctx.graph().is_complete();
    let mut out = Outcome::verdict(complete == ctx.soluble).with("complete", complete).with("soluble", ctx.soluble);
    if let Some(expected) = ctx.entry.is_soluble_expected {
        out = out.with("soluble_expected", expected);
        if expected != ctx.soluble {
            out = Outcome { status: Status::Fail, ..out }.note("declared solubility disagrees with the derived series");
        }
    }
    Ok(out)
}

fn radical_eq_universal(ctx: &GroupContext) -> Result<Outcome> {
    let (radical, _) = ctx.radical()?;
    let universal = universal_vertices(ctx.graph());
    let same = universal == radical.radical;
    let ok = same && radical.verified_normal && radical.verified_soluble && radical.quotient_radical_trivial;
    Ok(Outcome::verdict(ok)
        .with("radical_order", radical.radical.len())
        .with("universal_vertices", universal.len())
        .with("normal", radical.verified_normal)
        .with("soluble", radical.verified_soluble)
        .with("quotient_radical_trivial", radical.quotient_radical_trivial))
}

fn chain_containment(ctx: &GroupContext) -> Result<Outcome> {
    let eg = &ctx.eg;
    let (_, radical) = ctx.radical()?;
    for x in 0..eg.len() {
        let cyclic = eg.closure(&[x]).members;
        let centralizer = centralizer_bits(eg, x);
        let normalizer = cyclic_normalizer_bits(eg, x);
        let mut with_radical = normalizer.clone();
        with_radical.union_with(radical);
        let sol = ctx.atlas.bits(x);
        let links = [cyclic.is_subset(&centralizer), centralizer.is_subset(&normalizer), with_radical.is_subset(&sol)];
        if let Some(i) = links.iter().position(|ok| !ok) {
            return Ok(Outcome::verdict(false).with("broken_link", i + 1).at(ctx.element_name(x)));
        }
    }
    Ok(Outcome::verdict(true).with("elements", eg.len()))
}

fn divisibility_o_x(ctx: &GroupContext) -> Result<Outcome> {
    let eg = &ctx.eg;
    match (0..eg.len()).find(|&x| !ctx.atlas.size(x).is_multiple_of(eg.order_of(x) as usize)) {
        Some(x) => Ok(Outcome::verdict(false)
            .with("order", eg.order_of(x))
            .with("sol_size", ctx.atlas.size(x))
            .at(ctx.element_name(x))),
        None => Ok(Outcome::verdict(true).with("elements", eg.len())),
    }
}

fn divisibility_centralizer(ctx: &GroupContext) -> Result<Outcome> {
    let eg = &ctx.eg;
    for x in 0..eg.len() {
        let c = centralizer_bits(eg, x).count_ones(..);
        if !ctx.atlas.size(x).is_multiple_of(c) {
            return Ok(Outcome::verdict(false)
                .with("centralizer_order", c)
                .with("sol_size", ctx.atlas.size(x))
                .at(ctx.element_name(x)));
        }
    }
    Ok(Outcome::verdict(true).with("elements", eg.len()))
}

fn quotient_law(ctx: &GroupContext) -> Result<Outcome> {
    let (radical, bits) = ctx.radical()?;
    let r = radical.radical.len();
    if r == 1 {
        return Ok(Outcome::skipped("soluble radical is trivial"));
    }
    let eg = &ctx.eg;
    let q = quotient_by_bits(&ctx.entry.group, std::sync::Arc::clone(eg), bits);
    let qeg = q.group.enumerated()?;
    let q_atlas = crate::solubilizer::SolubilizerAtlas::compute(&q.group, &crate::solubilizer::PairCache::new())?;
    let image: Vec<usize> =
        (0..eg.len()).map(|g| qeg.index_of(&q.image_of_index(g)).expect("image lies in the quotient")).collect();
    for x in 0..eg.len() {
        let sol = ctx.atlas.bits(x);
        let q_sol = q_atlas.bits(image[x]);
        let sizes_ok = sol.count_ones(..) == r * q_sol.count_ones(..);
        let cosets_ok = (0..eg.len()).all(|y| sol.contains(y) == q_sol.contains(image[y]));
        if !(sizes_ok && cosets_ok) {
            return Ok(Outcome::verdict(false)
                .with("sol_size", sol.count_ones(..))
                .with("quotient_sol_size", q_sol.count_ones(..))
                .with("radical_order", r)
                .at(ctx.element_name(x)));
        }
    }
    Ok(Outcome::verdict(true).with("radical_order", r).with("quotient_order", qeg.len()).with("elements", eg.len()))
}

fn class_reps<'a>(ctx: &'a GroupContext<'_>) -> impl Iterator<Item = (usize, usize)> + 'a {
    ctx.eg.classes().reps.iter().copied().enumerate()
}

fn thm_a_iff(ctx: &GroupContext) -> Result<Outcome> {
    let mut witness = None;
    for (c, rep) in class_reps(ctx) {
        if commutator_condition_on(&ctx.eg, ctx.atlas.class_set(c), 3, CommutatorMode::Structural)? {
            witness = Some(rep);
            break;
        }
    }
    let class = nilpotency_class(&ctx.entry.group);
    let class_at_most_2 = class.is_some_and(|c| c <= 2);
    let mut out = Outcome::verdict(witness.is_some() == class_at_most_2)
        .with("condition_holds", witness.is_some())
        .with("nilpotent", class.is_some());
    if let Some(c) = class {
        out = out.with("nilpotency_class", c);
    }
    if let Some(x) = witness {
        out = out.at(ctx.element_name(x));
    }
    Ok(out)
}

fn lemma_nilpk(ctx: &GroupContext) -> Result<Outcome> {
    let mut compared = 0usize;
    let mut brute_skipped = 0usize;
    let mut out = Outcome::verdict(true);
    for k in 2..=4usize {
        let mut holds = 0usize;
        for (c, rep) in class_reps(ctx) {
            let sol = ctx.atlas.class_set(c);
            let structural = commutator_condition_on(&ctx.eg, sol, k, CommutatorMode::Structural)?;
            holds += usize::from(structural);
            if (sol.count_ones(..) as u128).pow(k as u32) > BRUTE_FORCE_BUDGET {
                brute_skipped += 1;
                continue;
            }
            let brute = commutator_condition_on(&ctx.eg, sol, k, CommutatorMode::Brute)?;
            compared += 1;
            if brute != structural {
                return Ok(Outcome::verdict(false)
                    .with("k", k)
                    .with("brute", brute)
                    .with("structural", structural)
                    .at(ctx.element_name(rep)));
            }
        }
        out = out.with(&format!("holds_k{k}"), holds);
    }
    Ok(out.with("compared", compared).with("brute_skipped", brute_skipped))
}

fn lem_subgroup_odd_prime_power(ctx: &GroupContext) -> Result<Outcome> {
    let mut subgroups = 0usize;
    for (c, rep) in class_reps(ctx) {
        let sol = ctx.atlas.class_set(c);
        if ctx.eg.subgroup_generators(sol).is_none() {
            continue;
        }
        subgroups += 1;
        let size = sol.count_ones(..);
        if prime_power(size).is_some_and(|(p, _)| p % 2 == 1) {
            return Ok(Outcome::verdict(false).with("sol_size", size).at(ctx.element_name(rep)));
        }
    }
    Ok(Outcome::verdict(true).with("subgroup_classes", subgroups))
}

fn thm_b_not_p_squared(ctx: &GroupContext) -> Result<Outcome> {
    Ok(size_scan(ctx, |s| prime_power(s).is_some_and(|(_, e)| e == 2)))
}

fn cor_cubo(ctx: &GroupContext) -> Result<Outcome> {
    if ctx.radical_order()? == 1 {
        return Ok(Outcome::skipped("soluble radical is trivial; the statement assumes R(G) != 1"));
    }
    Ok(size_scan(ctx, |s| prime_power(s).is_some_and(|(_, e)| e == 3)))
}

fn prop_not_8(ctx: &GroupContext) -> Result<Outcome> {
    Ok(size_scan(ctx, |s| s == 8))
}

fn prop_not_6(ctx: &GroupContext) -> Result<Outcome> {
    Ok(size_scan(ctx, |s| s == 6))
}

fn cor_geq_10(ctx: &GroupContext) -> Result<Outcome> {
    Ok(size_scan(ctx, |s| s < 10))
}

fn sol_not_prime(ctx: &GroupContext) -> Result<Outcome> {
    Ok(size_scan(ctx, is_prime))
}

fn lem_six_values(ctx: &GroupContext) -> Result<Outcome> {
    if ctx.radical_order()? != 1 {
        return Ok(Outcome::skipped("soluble radical is not trivial"));
    }
    let eg = &ctx.eg;
    let instances: Vec<usize> =
        (0..eg.len()).filter(|&x| eg.order_of(x) == 3 && centralizer_bits(eg, x).count_ones(..) == 3).collect();
    let mut out = Outcome::verdict(true).with("instances", instances.len());
    if let Some(&first) = instances.first() {
        out = out.with("sol_size", ctx.atlas.size(first)).at(ctx.element_name(first));
    }
    if let Some(&x) = instances.iter().find(|&&x| ![24, 78].contains(&ctx.atlas.size(x))) {
        out = Outcome::verdict(false)
            .with("instances", instances.len())
            .with("sol_size", ctx.atlas.size(x))
            .at(ctx.element_name(x));
    }
    Ok(out)
}

fn prop_3p(ctx: &GroupContext) -> Result<Outcome> {
    let eg = &ctx.eg;
    let mut instances = 0usize;
    for x in 0..eg.len() {
        let size = ctx.atlas.size(x);
        if !size.is_multiple_of(3) || !is_prime(size / 3) {
            continue;
        }
        instances += 1;
        let p = size / 3;
        let order_ok = eg.order_of(x) as usize == p;
        let residue_ok = p % 3 == 1;
        let normalizer_ok = ctx.atlas.bits(x) == cyclic_normalizer_bits(eg, x);
        if !(order_ok && residue_ok && normalizer_ok) {
            return Ok(Outcome::verdict(false)
                .with("sol_size", size)
                .with("order", eg.order_of(x))
                .with("equals_normalizer", normalizer_ok)
                .at(ctx.element_name(x)));
        }
    }
    Ok(Outcome::verdict(true).with("instances", instances))
}

fn lemma_bob(ctx: &GroupContext) -> Result<Outcome> {
    let eg = &ctx.eg;
    let mut instances = 0usize;
    for x in 0..eg.len() {
        let p = eg.order_of(x) as usize;
        if !is_prime(p) || ctx.atlas.size(x) > p * p {
            continue;
        }
        instances += 1;
        if ctx.atlas.bits(x) != cyclic_normalizer_bits(eg, x) {
            return Ok(Outcome::verdict(false).with("sol_size", ctx.atlas.size(x)).at(ctx.element_name(x)));
        }
    }
    Ok(Outcome::verdict(true).with("instances", instances))
}

fn diameter_bounds(ctx: &GroupContext) -> Result<Outcome> {
    let graph = ctx.graph();
    let (radical, radical_bits) = ctx.radical()?;
    let reduced = reduced_graph(graph, &radical.radical)?;
    let connected = is_connected(&reduced)?;
    let bound = if ctx.entry.is_almost_simple == Some(false) { 3 } else { 5 };
    let base = |ok| {
        Outcome::verdict(ok).with("vertices", reduced.vertex_count()).with("connected", connected).with("bound", bound)
    };
    if !connected {
        return Ok(base(false));
    }
    // conjugation is a graph automorphism fixing R(G), so class
    // representatives realize every eccentricity
    let mut diameter = 0;
    for (_, rep) in class_reps(ctx) {
        if radical_bits.contains(rep) {
            continue;
        }
        let v = reduced.vertex_index(ctx.eg.element(rep)).expect("non-radical vertex");
        diameter = diameter.max(reduced.eccentricity(v).expect("connected"));
    }
    Ok(base(diameter <= bound).with("diameter", diameter))
}

fn remark_k4_search(ctx: &GroupContext) -> Result<Outcome> {
    let hits = remark_hits(&ctx.entry.name, &ctx.atlas, 4)?;
    let sylow = hits.iter().filter(|h| h.sylow_2_order).count();
    let mut out = Outcome::verdict(true)
        .with("k", 4usize)
        .with("hits", hits.len())
        .with("sylow_2_hits", sylow)
        .with("finding", !hits.is_empty());
    if let Some(first) = hits.first() {
        out = out
            .at(first.element.clone())
            .note(format!("finding: {} element(s) satisfy the weight-4 condition", hits.len()));
    }
    Ok(out)
}
