namespace fano {
} // namespace fano
