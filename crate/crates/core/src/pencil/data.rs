//! Built-in matrices, kept as text in their printed layout.

/// The net of skew forms, rows separated by newlines, entries by `&`.
pub const BETA_TEXT: &str = "\
0&u^2&2*u*v&v^2&0&0
-u^2&0&0&0&0&0
-2*u*v&0&0&0&0&u^2
-v^2&0&0&0&0&2*u*v
0&0&0&0&0&v^2
0&0&-u^2&-2*u*v&-v^2&0
";

/// The same net viewed as a skew form on a 12-dimensional space.
pub const FLATTENING_TEXT: &str = "\
0&0&1&0&0&1&0&0&0&0&0&0
0&0&0&0&1&0&0&1&0&0&0&0
-1&0&0&0&0&0&0&0&0&0&0&0
0&0&0&0&0&0&0&0&0&0&0&0
0&-1&0&0&0&0&0&0&0&0&1&0
-1&0&0&0&0&0&0&0&0&0&0&0
0&0&0&0&0&0&0&0&0&0&0&1
0&-1&0&0&0&0&0&0&0&0&1&0
0&0&0&0&0&0&0&0&0&0&0&0
0&0&0&0&0&0&0&0&0&0&0&1
0&0&0&0&-1&0&0&-1&0&0&0&0
0&0&0&0&0&0&-1&0&0&-1&0&0
";
