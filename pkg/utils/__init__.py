# Utils package for the Coxeter Genus Tool
