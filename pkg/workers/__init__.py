# Workers package: background exploration batches
