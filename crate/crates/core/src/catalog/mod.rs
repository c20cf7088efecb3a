//! Catalog of Norton-Sakuma algebras and their covers.
