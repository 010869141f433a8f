//! Seeded synthetic headline corpus with planted category differences.
//!
//! The six categories fall into two registers. `pants_on_fire`, `false`,
//! `barely_true` and `half_true` share a punchy register: short words, more
//! names, adjectives, numbers and evaluative vocabulary. `mostly_true` and
//! `true` share a formal register with longer policy vocabulary and a rigid
//! one-name, one-verb shape. Within a register the categories are drawn from
//! the same distribution.
//!
//! Duplicate headline texts are kept; ids are unique.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::dataset::{HeadlineRecord, TruthLabel};

/// Category sizes of the bundled corpus, in [`TruthLabel::ALL`] order.
pub const FIXTURE_COUNTS: [usize; 6] = [955, 2257, 1891, 2362, 2213, 1845];

pub const DEFAULT_SEED: u64 = 1;

const NAMES: &[&str] = &[
    "Obama", "Trump", "Clinton", "Romney", "Perry", "Walker", "Pelosi", "Sanders", "Rubio", "Biden", "Christie",
    "Kasich", "Abbott", "Cuomo", "Scott", "Kaine", "Warren", "Cruz", "Bush", "Gore",
];

const FORMAL_VERBS: &[&str] = &[
    "proposed",
    "approved",
    "increased",
    "reduced",
    "expanded",
    "considered",
    "released",
    "received",
    "estimated",
    "introduced",
    "exceeded",
    "announced",
    "invested",
    "maintained",
    "established",
    "eliminated",
    "doubled",
    "funded",
];

const FORMAL_NOUNS: &[(&str, &str)] = &[
    ("legislation", "NN"),
    ("government", "NN"),
    ("population", "NN"),
    ("department", "NN"),
    ("spending", "NN"),
    ("education", "NN"),
    ("insurance", "NN"),
    ("healthcare", "NN"),
    ("employment", "NN"),
    ("households", "NNS"),
    ("residents", "NNS"),
    ("students", "NNS"),
    ("taxpayers", "NNS"),
    ("contracts", "NNS"),
    ("pensions", "NNS"),
    ("regulations", "NNS"),
    ("hospitals", "NNS"),
    ("programs", "NNS"),
    ("districts", "NNS"),
    ("elections", "NNS"),
    ("immigrants", "NNS"),
    ("revenue", "NN"),
    ("agencies", "NNS"),
    ("veterans", "NNS"),
    ("emissions", "NNS"),
    ("teachers", "NNS"),
    ("property", "NN"),
    ("community", "NN"),
];

const FORMAL_PREPOSITIONS: &[&str] = &["for", "across", "through", "during", "under", "between", "among", "within"];
const FORMAL_ADJECTIVES: &[&str] = &["federal", "national", "local"];

const PUNCHY_VERBS: &[(&str, &str)] = &[
    ("bans", "ban"),
    ("wants", "want"),
    ("hides", "hide"),
    ("sells", "sell"),
    ("hits", "hit"),
    ("takes", "take"),
    ("gives", "give"),
    ("pays", "pay"),
    ("sends", "send"),
    ("keeps", "keep"),
    ("blocks", "block"),
];

const PUNCHY_NOUNS: &[(&str, &str)] = &[
    ("tax", "NN"),
    ("taxes", "NNS"),
    ("guns", "NNS"),
    ("jobs", "NNS"),
    ("plan", "NN"),
    ("deal", "NN"),
    ("bill", "NN"),
    ("law", "NN"),
    ("cash", "NN"),
    ("money", "NN"),
    ("votes", "NNS"),
    ("kids", "NNS"),
    ("cops", "NNS"),
    ("wall", "NN"),
    ("oil", "NN"),
    ("gas", "NN"),
    ("land", "NN"),
    ("food", "NN"),
    ("debt", "NN"),
];

const PUNCHY_ADJECTIVES: &[&str] = &["new", "big", "huge", "top", "real", "total", "full", "massive", "tiny", "whole"];

const EVALUATIVE: &[&str] = &[
    "evil",
    "crooked",
    "corrupt",
    "illegal",
    "shocking",
    "terrible",
    "fake",
    "great",
    "amazing",
    "perfect",
    "dangerous",
    "disgusting",
    "outrageous",
    "horrible",
    "stupid",
    "radical",
    "wonderful",
    "tragic",
    "brutal",
    "violent",
    "toxic",
];

const NUMBERS: &[&str] = &["3,000", "90%", "$400", "1.5", "40", "700,000", "12", "$2,500", "85%", "200"];
const COUNT_NOUNS: &[&str] = &["jobs", "guns", "kids", "cops", "votes", "taxes"];

#[derive(Default)]
struct Builder {
    words: Vec<String>,
    tags: Vec<&'static str>,
}

impl Builder {
    fn push(&mut self, word: &str, tag: &'static str) {
        self.words.push(word.to_owned());
        self.tags.push(tag);
    }

    fn finish(mut self, id: String, label: TruthLabel, terminal: Option<&str>) -> HeadlineRecord {
        if let Some(first) = self.words.first_mut() {
            let mut chars = first.chars();
            if let Some(c) = chars.next() {
                *first = c.to_uppercase().chain(chars).collect();
            }
        }
        let mut text = self.words.join(" ");
        if let Some(t) = terminal {
            text.push_str(t);
        }
        HeadlineRecord::new(id, &text, Some(label))
            .expect("generated text is non-empty")
            .with_pretags(self.tags.join(" "))
    }
}

fn pick<'a, T>(rng: &mut ChaCha8Rng, items: &'a [T]) -> &'a T {
    items.choose(rng).expect("non-empty pool")
}

fn formal(rng: &mut ChaCha8Rng) -> Builder {
    let mut b = Builder::default();
    b.push(pick(rng, NAMES), "NNP");
    b.push(pick(rng, FORMAL_VERBS), "VBD");
    let phrases = [0, 0, 0, 1, 1, 1, 1, 2, 2, 2][rng.gen_range(0..10)];
    for i in 0..=phrases {
        if i > 0 {
            b.push(pick(rng, FORMAL_PREPOSITIONS), "IN");
        }
        if rng.gen_bool(0.5) {
            b.push("the", "DT");
        }
        if i == 0 && rng.gen_bool(0.03) {
            b.push(pick(rng, FORMAL_ADJECTIVES), "JJ");
        }
        if i == 0 && rng.gen_bool(0.04) {
            b.push(pick(rng, EVALUATIVE), "JJ");
        }
        let (noun, tag) = pick(rng, FORMAL_NOUNS);
        b.push(noun, tag);
    }
    if rng.gen_bool(0.03) {
        b.push("for", "IN");
        b.push(pick(rng, NUMBERS), "CD");
        b.push(pick(rng, COUNT_NOUNS), "NNS");
    }
    b
}

fn punchy(rng: &mut ChaCha8Rng) -> (Builder, Option<&'static str>) {
    let mut b = Builder::default();
    if rng.gen_bool(0.25) {
        b.push("says", "VBZ");
    }
    let name = pick(rng, NAMES);
    b.push(name, "NNP");
    let plural = rng.gen_bool(0.4);
    if plural {
        let other = loop {
            let candidate = pick(rng, NAMES);
            if candidate != name {
                break candidate;
            }
        };
        b.push("and", "CC");
        b.push(other, "NNP");
    }
    let (third_person, base) = pick(rng, PUNCHY_VERBS);
    if rng.gen_bool(0.2) {
        b.push("will", "MD");
        b.push(base, "VB");
    } else if plural {
        b.push(base, "VBP");
    } else {
        b.push(third_person, "VBZ");
    }
    if rng.gen_bool(0.45) {
        b.push(pick(rng, EVALUATIVE), "JJ");
    }
    if rng.gen_bool(0.4) {
        b.push(pick(rng, PUNCHY_ADJECTIVES), "JJ");
    }
    let (noun, tag) = pick(rng, PUNCHY_NOUNS);
    b.push(noun, tag);
    if rng.gen_bool(0.35) {
        b.push("for", "IN");
        b.push(pick(rng, NUMBERS), "CD");
        b.push(pick(rng, COUNT_NOUNS), "NNS");
    }
    let terminal = if rng.gen_bool(0.15) { Some("!") } else { None };
    (b, terminal)
}

fn is_formal(label: TruthLabel) -> bool {
    matches!(label, TruthLabel::MostlyTrue | TruthLabel::True)
}

/// Generates `counts[i]` records for each label in [`TruthLabel::ALL`] order,
/// then shuffles them. Output depends only on `seed` and `counts`.
pub fn generate_fixture(seed: u64, counts: [usize; 6]) -> Vec<HeadlineRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut records = Vec::with_capacity(counts.iter().sum());
    for (label, &n) in TruthLabel::ALL.iter().zip(&counts) {
        for i in 0..n {
            let id = format!("{}-{:04}", label.as_str(), i + 1);
            let record = if is_formal(*label) {
                formal(&mut rng).finish(id, *label, None)
            } else {
                let (b, terminal) = punchy(&mut rng);
                b.finish(id, *label, terminal)
            };
            records.push(record);
        }
    }
    records.shuffle(&mut rng);
    records
}
