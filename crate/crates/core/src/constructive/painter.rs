//! Partial-coloring state shared by the constructive algorithms.
//!
//! Every paint is checked against the real distance constraints, so the
//! partial coloring is valid at all times. Multi-step recolorings run inside
//! [`Painter::attempt`], which rolls back on failure.

use crate::graph::Graph;
use crate::sequence::SSequence;
use crate::solver::Coloring;

use super::{ConstructError, ReplayEntry};

pub(crate) struct Painter<'g> {
    pub g: &'g Graph,
    pub method: &'static str,
    radii: Vec<u32>,
    color: Vec<Option<usize>>,
    sub: Vec<Option<usize>>,
    log: Vec<ReplayEntry>,
}

pub(crate) struct Checkpoint {
    color: Vec<Option<usize>>,
    sub: Vec<Option<usize>>,
    log_len: usize,
}

impl<'g> Painter<'g> {
    pub fn new(g: &'g Graph, s: &SSequence, method: &'static str) -> Self {
        Painter {
            g,
            method,
            radii: s.terms().to_vec(),
            color: vec![None; g.n()],
            sub: vec![None; g.n()],
            log: Vec::new(),
        }
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.color[v]
    }

    pub fn fail(&self, case: &str, vertex: usize) -> ConstructError {
        ConstructError::CaseFailure {
            method: self.method.to_string(),
            case: case.to_string(),
            vertex: Some(vertex),
        }
    }

    /// Colored vertices other than `v` that forbid `slot` at `v`.
    pub fn blockers(&self, v: usize, slot: usize) -> Vec<usize> {
        let r = self.radii[slot];
        (0..self.g.n())
            .filter(|&w| w != v && self.color[w] == Some(slot) && self.g.dist(v, w) <= r)
            .collect()
    }

    pub fn free(&self, v: usize, slot: usize) -> bool {
        let r = self.radii[slot];
        (0..self.g.n()).all(|w| w == v || self.color[w] != Some(slot) || self.g.dist(v, w) > r)
    }

    pub fn first_free(&self, v: usize, slots: impl IntoIterator<Item = usize>) -> Option<usize> {
        slots.into_iter().find(|&s| self.free(v, s))
    }

    /// Neighbors of `v` holding `slot`.
    pub fn neighbors_with(&self, v: usize, slot: usize) -> Vec<usize> {
        self.g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| self.color[w] == Some(slot))
            .collect()
    }

    pub fn paint(
        &mut self,
        v: usize,
        slot: usize,
        sub: Option<usize>,
        rule: &'static str,
    ) -> Result<(), ConstructError> {
        if !self.free(v, slot) {
            return Err(self.fail(rule, v));
        }
        self.color[v] = Some(slot);
        self.sub[v] = sub;
        self.log.push(ReplayEntry {
            vertex: v,
            slot: Some(slot),
            subsidiary: sub,
            rule,
        });
        Ok(())
    }

    pub fn erase(&mut self, v: usize, rule: &'static str) {
        self.color[v] = None;
        self.sub[v] = None;
        self.log.push(ReplayEntry {
            vertex: v,
            slot: None,
            subsidiary: None,
            rule,
        });
    }

    /// Moves `v` to another slot of `palette`, never one listed in `avoid`.
    /// The stored subsidiary is preferred while it is still usable; the old
    /// slot becomes the new subsidiary.
    pub fn recolor(
        &mut self,
        v: usize,
        palette: &[usize],
        avoid: &[usize],
        rule: &'static str,
    ) -> Result<(), ConstructError> {
        let old = self.color[v];
        let usable = |s: usize| Some(s) != old && !avoid.contains(&s) && self.free(v, s);
        let target = self
            .sub[v]
            .filter(|&s| palette.contains(&s) && usable(s))
            .or_else(|| palette.iter().copied().find(|&s| usable(s)))
            .ok_or_else(|| self.fail(rule, v))?;
        self.paint(v, target, old, rule)
    }

    /// Recolors `targets` together with every colored vertex within distance
    /// 2 of them by exhaustive search, all other vertices fixed.
    pub fn gap_repair(&mut self, targets: &[usize], rule: &'static str) -> Result<(), ConstructError> {
        let mut vs: Vec<usize> = (0..self.g.n())
            .filter(|&w| {
                targets.contains(&w)
                    || (self.color[w].is_some() && targets.iter().any(|&t| self.g.dist(t, w) <= 2))
            })
            .collect();
        vs.sort_by_key(|&w| std::cmp::Reverse(self.g.degree(w)));
        let cp = self.checkpoint();
        for &w in &vs {
            self.color[w] = None;
        }
        let slots = self.radii.len();
        let mut chosen = vec![0usize; vs.len()];
        let mut i = 0;
        loop {
            let v = vs[i];
            match (chosen[i]..slots).find(|&s| self.free(v, s)) {
                Some(s) => {
                    self.color[v] = Some(s);
                    chosen[i] = s + 1;
                    i += 1;
                    if i == vs.len() {
                        break;
                    }
                    chosen[i] = 0;
                }
                None => {
                    if i == 0 {
                        let target = targets[0];
                        self.rollback(cp);
                        return Err(self.fail(rule, target));
                    }
                    self.color[v] = None;
                    i -= 1;
                    self.color[vs[i]] = None;
                }
            }
        }
        let found: Vec<usize> = vs.iter().map(|&w| self.color[w].unwrap()).collect();
        for &w in &vs {
            self.color[w] = None;
            self.sub[w] = None;
            self.log.push(ReplayEntry { vertex: w, slot: None, subsidiary: None, rule });
        }
        for (&w, &s) in vs.iter().zip(&found) {
            self.paint(w, s, None, rule)?;
        }
        Ok(())
    }

    pub fn checkpoint(&self) -> Checkpoint {
        Checkpoint {
            color: self.color.clone(),
            sub: self.sub.clone(),
            log_len: self.log.len(),
        }
    }

    pub fn rollback(&mut self, cp: Checkpoint) {
        self.color = cp.color;
        self.sub = cp.sub;
        self.log.truncate(cp.log_len);
    }

    /// Runs `f`; on error the state is restored and `false` returned.
    pub fn attempt(&mut self, f: impl FnOnce(&mut Self) -> Result<(), ConstructError>) -> bool {
        let cp = self.checkpoint();
        match f(self) {
            Ok(()) => true,
            Err(_) => {
                self.rollback(cp);
                false
            }
        }
    }

    pub fn into_parts(self) -> (Coloring, Vec<Option<usize>>, Vec<ReplayEntry>) {
        (Coloring::from_partial(self.color), self.sub, self.log)
    }
}
