//! Script language and reporting front end (placeholder during bring-up).
