//! CoNLL-U reading and writing, plus the head/child branch structure that
//! the scorer walks.
//!
//! Only basic word lines are modeled. Multiword-token ranges (`3-4`) and
//! empty nodes (`3.1`) are skipped on parse, and the XPOS, DEPS and MISC
//! columns are written back as `_`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// One basic word line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    /// 1-based position in the sentence.
    pub id: usize,
    pub form: String,
    pub lemma: String,
    pub upos: String,
    /// Morphological features, e.g. `Polarity=Neg`.
    pub feats: BTreeMap<String, String>,
    /// Head token id, `0` for the root attachment.
    pub head: usize,
    pub deprel: String,
}

impl Token {
    pub fn new(id: usize, form: &str, lemma: &str, upos: &str, head: usize, deprel: &str) -> Self {
        Token {
            id,
            form: form.to_string(),
            lemma: lemma.to_string(),
            upos: upos.to_string(),
            feats: BTreeMap::new(),
            head,
            deprel: deprel.to_string(),
        }
    }

    pub fn with_feat(mut self, key: &str, value: &str) -> Self {
        self.feats.insert(key.to_string(), value.to_string());
        self
    }

    pub fn feat(&self, key: &str) -> Option<&str> {
        self.feats.get(key).map(String::as_str)
    }

    pub fn is_punct(&self) -> bool {
        self.upos == "PUNCT"
    }
}

/// Why a head assignment does not form a single rooted tree.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("sentence has no tokens")]
    Empty,
    #[error("expected token id {expected}, found {found}")]
    IdOutOfSequence { expected: usize, found: usize },
    #[error("token {token} is its own head")]
    SelfLoop { token: usize },
    #[error("token {token} has head {head}, beyond the last token {len}")]
    HeadOutOfRange {
        token: usize,
        head: usize,
        len: usize,
    },
    #[error("no token attaches to the root")]
    NoRoot,
    #[error("multiple root tokens: {tokens:?}")]
    MultipleRoots { tokens: Vec<usize> },
    #[error("token {token} is part of a head cycle")]
    Cycle { token: usize },
}

impl TreeError {
    /// The token the error is about, if there is a single one.
    pub fn token(&self) -> Option<usize> {
        match *self {
            TreeError::IdOutOfSequence { found, .. } => Some(found),
            TreeError::SelfLoop { token }
            | TreeError::HeadOutOfRange { token, .. }
            | TreeError::Cycle { token } => Some(token),
            TreeError::MultipleRoots { ref tokens } => tokens.get(1).copied(),
            TreeError::Empty | TreeError::NoRoot => None,
        }
    }
}

/// A validated dependency tree.
///
/// Token ids are exactly `1..=n`, exactly one token attaches to `0`, and
/// following head links from any token reaches `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sentence {
    tokens: Vec<Token>,
    comments: Vec<String>,
}

impl Sentence {
    pub fn new(tokens: Vec<Token>) -> Result<Self, TreeError> {
        validate_tree(&tokens)?;
        Ok(Sentence {
            tokens,
            comments: Vec::new(),
        })
    }

    /// Builds a sentence carrying comment lines (without the leading `#`).
    pub fn with_comments(tokens: Vec<Token>, comments: Vec<String>) -> Result<Self, TreeError> {
        let mut sentence = Sentence::new(tokens)?;
        sentence.comments = comments;
        Ok(sentence)
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn comments(&self) -> &[String] {
        &self.comments
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Token by 1-based id.
    pub fn token(&self, id: usize) -> Option<&Token> {
        id.checked_sub(1).and_then(|i| self.tokens.get(i))
    }

    /// Value of a `# sent_id = ...` comment, if present.
    pub fn sent_id(&self) -> Option<&str> {
        self.comments.iter().find_map(|c| {
            let (key, value) = c.split_once('=')?;
            (key.trim() == "sent_id").then(|| value.trim())
        })
    }

    /// Id of the token attached to the virtual root.
    pub fn root(&self) -> usize {
        self.tokens
            .iter()
            .find(|t| t.head == 0)
            .map(|t| t.id)
            .expect("validated sentence has a root")
    }

    /// Number of head links from `id` up to the virtual root (`depth(0) = 0`).
    pub fn depth(&self, mut id: usize) -> usize {
        let mut depth = 0;
        while id != 0 {
            id = self.tokens[id - 1].head;
            depth += 1;
        }
        depth
    }
}

fn validate_tree(tokens: &[Token]) -> Result<(), TreeError> {
    if tokens.is_empty() {
        return Err(TreeError::Empty);
    }
    let n = tokens.len();
    for (i, token) in tokens.iter().enumerate() {
        if token.id != i + 1 {
            return Err(TreeError::IdOutOfSequence {
                expected: i + 1,
                found: token.id,
            });
        }
    }
    for token in tokens {
        if token.head == token.id {
            return Err(TreeError::SelfLoop { token: token.id });
        }
        if token.head > n {
            return Err(TreeError::HeadOutOfRange {
                token: token.id,
                head: token.head,
                len: n,
            });
        }
    }
    let roots: Vec<usize> = tokens
        .iter()
        .filter(|t| t.head == 0)
        .map(|t| t.id)
        .collect();
    match roots.len() {
        0 => return Err(TreeError::NoRoot),
        1 => {}
        _ => return Err(TreeError::MultipleRoots { tokens: roots }),
    }
    // 0 = unvisited, 1 = on the current path, 2 = known to reach the root.
    let mut state = vec![0u8; n + 1];
    state[0] = 2;
    for start in 1..=n {
        let mut path = Vec::new();
        let mut id = start;
        while state[id] == 0 {
            state[id] = 1;
            path.push(id);
            id = tokens[id - 1].head;
        }
        if state[id] == 1 {
            return Err(TreeError::Cycle { token: id });
        }
        for visited in path {
            state[visited] = 2;
        }
    }
    Ok(())
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConlluError {
    #[error("line {line}{}: {reason}", fmt_sent_id(.sent_id))]
    MalformedLine {
        line: usize,
        sent_id: Option<String>,
        reason: String,
    },
    #[error("line {line}{}: invalid tree: {source}", fmt_sent_id(.sent_id))]
    InvalidTree {
        line: usize,
        sent_id: Option<String>,
        source: TreeError,
    },
}

fn fmt_sent_id(sent_id: &Option<String>) -> String {
    match sent_id {
        Some(id) => format!(" (sent_id {id})"),
        None => String::new(),
    }
}

#[derive(Default)]
struct Block {
    first_line: usize,
    comments: Vec<String>,
    tokens: Vec<Token>,
    token_lines: Vec<usize>,
}

impl Block {
    fn sent_id(&self) -> Option<String> {
        self.comments.iter().find_map(|c| {
            let (key, value) = c.split_once('=')?;
            (key.trim() == "sent_id").then(|| value.trim().to_string())
        })
    }

    fn finish(self) -> Result<Option<Sentence>, ConlluError> {
        if self.tokens.is_empty() {
            return Ok(None);
        }
        let sent_id = self.sent_id();
        let Block {
            first_line,
            comments,
            tokens,
            token_lines,
        } = self;
        Sentence::with_comments(tokens, comments)
            .map(Some)
            .map_err(|source| {
                let line = source
                    .token()
                    .and_then(|id| token_lines.get(id.wrapping_sub(1)).copied())
                    .unwrap_or(first_line);
                ConlluError::InvalidTree {
                    line,
                    sent_id,
                    source,
                }
            })
    }
}

/// Parses every sentence block in `input`.
///
/// Comment-only blocks are dropped; comments of a sentence block are kept
/// and written back by [`serialize_conllu`].
pub fn parse_conllu(input: &str) -> Result<Vec<Sentence>, ConlluError> {
    let mut sentences = Vec::new();
    let mut block = Block::default();

    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.trim().is_empty() {
            if let Some(sentence) = std::mem::take(&mut block).finish()? {
                sentences.push(sentence);
            }
            continue;
        }
        if block.comments.is_empty() && block.tokens.is_empty() {
            block.first_line = line_no;
        }
        if let Some(comment) = line.strip_prefix('#') {
            block.comments.push(comment.trim_start().to_string());
            continue;
        }
        if let Some(token) = parse_word_line(line).map_err(|reason| ConlluError::MalformedLine {
            line: line_no,
            sent_id: block.sent_id(),
            reason,
        })? {
            block.tokens.push(token);
            block.token_lines.push(line_no);
        }
    }
    if let Some(sentence) = block.finish()? {
        sentences.push(sentence);
    }
    Ok(sentences)
}

/// `Ok(None)` for multiword ranges and empty nodes.
fn parse_word_line(line: &str) -> Result<Option<Token>, String> {
    let fields: Vec<&str> = line.split('\t').collect();
    if fields.len() != 10 {
        return Err(format!(
            "expected 10 tab-separated columns, found {}",
            fields.len()
        ));
    }
    let id_field = fields[0];
    if id_field.contains('-') || id_field.contains('.') {
        return Ok(None);
    }
    let id: usize = id_field
        .parse()
        .map_err(|_| format!("invalid token id {id_field:?}"))?;
    if id == 0 {
        return Err("token id must be at least 1".to_string());
    }
    let head: usize = fields[6]
        .parse()
        .map_err(|_| format!("invalid head {:?}", fields[6]))?;
    Ok(Some(Token {
        id,
        form: fields[1].to_string(),
        lemma: fields[2].to_string(),
        upos: fields[3].to_string(),
        feats: parse_feats(fields[5])?,
        head,
        deprel: fields[7].to_string(),
    }))
}

fn parse_feats(field: &str) -> Result<BTreeMap<String, String>, String> {
    let mut feats = BTreeMap::new();
    if field == "_" {
        return Ok(feats);
    }
    for pair in field.split('|') {
        let (key, value) = pair
            .split_once('=')
            .filter(|(k, v)| !k.is_empty() && !v.is_empty())
            .ok_or_else(|| format!("malformed feature {pair:?}"))?;
        if feats.insert(key.to_string(), value.to_string()).is_some() {
            return Err(format!("duplicate feature {key:?}"));
        }
    }
    Ok(feats)
}

struct FeatsDisplay<'a>(&'a BTreeMap<String, String>);

impl fmt::Display for FeatsDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("_");
        }
        for (i, (key, value)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{key}={value}")?;
        }
        Ok(())
    }
}

/// Writes sentences back out, each followed by a blank line.
pub fn serialize_conllu(sentences: &[Sentence]) -> String {
    let mut out = String::new();
    for sentence in sentences {
        for comment in &sentence.comments {
            out.push_str("# ");
            out.push_str(comment);
            out.push('\n');
        }
        for t in &sentence.tokens {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t_\t{}\t{}\t{}\t_\t_\n",
                t.id,
                t.form,
                t.lemma,
                t.upos,
                FeatsDisplay(&t.feats),
                t.head,
                t.deprel
            ));
        }
        out.push('\n');
    }
    out
}

/// Head id → its direct dependents, in token order. The virtual root `0`
/// is always present with the sentence root as its only child.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeadChildMap {
    branches: BTreeMap<usize, Vec<usize>>,
    depths: Vec<usize>,
}

impl HeadChildMap {
    pub fn children(&self, head: usize) -> &[usize] {
        self.branches.get(&head).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn is_head(&self, id: usize) -> bool {
        self.branches.contains_key(&id)
    }

    pub fn heads(&self) -> impl Iterator<Item = usize> + '_ {
        self.branches.keys().copied()
    }

    pub fn branches(&self) -> &BTreeMap<usize, Vec<usize>> {
        &self.branches
    }

    /// Head links from `id` to the virtual root.
    pub fn depth(&self, id: usize) -> usize {
        self.depths[id]
    }
}

pub fn build_head_child_map(sentence: &Sentence) -> HeadChildMap {
    let mut branches: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for token in &sentence.tokens {
        branches.entry(token.head).or_default().push(token.id);
    }
    let depths = (0..=sentence.len()).map(|id| sentence.depth(id)).collect();
    HeadChildMap { branches, depths }
}

/// Heads from the deepest branch up to the virtual root: decreasing depth,
/// ties by increasing head id, `0` last.
pub fn branch_order(map: &HeadChildMap) -> Vec<usize> {
    let mut heads: Vec<usize> = map.heads().collect();
    heads.sort_by(|&a, &b| map.depth(b).cmp(&map.depth(a)).then(a.cmp(&b)));
    heads
}
