namespace partitionlab {}
